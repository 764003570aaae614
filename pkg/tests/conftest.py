import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from swl.arcsys import build_arc_system
from swl.cover import TilingBall
from swl.engine import GeodesicEngine
from swl.surface import (
    GENUS2_SPEC,
    TORUS_SPEC,
    TORUS_TRIANGLES_SPEC,
    build_complex,
    parse_surface_spec,
)

SPEC_TEXTS = {
    "torus": TORUS_SPEC,
    "genus2": GENUS2_SPEC,
    "triangles": TORUS_TRIANGLES_SPEC,
}

# one-holed torus cut into two triangles and a holed bigon by four loops;
# the triangles share an edge, so the crossing glue rule is exercised
CASE2_SPEC = "generators: a b c d\nrotation: a b c a' d b' c' d'\nholed: 1\n"


@pytest.fixture(scope="session")
def torus():
    return build_complex(parse_surface_spec(TORUS_SPEC))


@pytest.fixture(scope="session")
def genus2():
    return build_complex(parse_surface_spec(GENUS2_SPEC))


@pytest.fixture(scope="session")
def triangles():
    return build_complex(parse_surface_spec(TORUS_TRIANGLES_SPEC))


@pytest.fixture(scope="session")
def case2():
    return build_complex(parse_surface_spec(CASE2_SPEC))


@pytest.fixture(scope="session")
def engines(torus, genus2, triangles, case2):
    return {
        "torus": GeodesicEngine(torus),
        "genus2": GeodesicEngine(genus2),
        "triangles": GeodesicEngine(triangles),
        "case2": GeodesicEngine(case2),
    }


@pytest.fixture(scope="session")
def balls(torus, genus2, triangles, case2):
    return {
        "torus": TilingBall(torus),
        "genus2": TilingBall(genus2),
        "triangles": TilingBall(triangles),
        "case2": TilingBall(case2),
    }


@pytest.fixture(scope="session")
def arc_systems(torus, genus2, triangles, case2):
    return {
        "torus": build_arc_system(torus),
        "genus2": build_arc_system(genus2),
        "triangles": build_arc_system(triangles),
        "case2": build_arc_system(case2),
    }


@pytest.fixture()
def spec_dir(tmp_path):
    for name, text in SPEC_TEXTS.items():
        (tmp_path / f"{name}.srf").write_text(text)
    return tmp_path
