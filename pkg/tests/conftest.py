import random

import pytest

from orbichern import AmbientSurfaceData, CurveComponent, IntersectionMatrix, SmoothOrbifoldSurface


def random_ambient(rng: random.Random, max_components: int = 4, allow_infinite: bool = False) -> AmbientSurfaceData:
    n = rng.randint(0, max_components)
    comps = []
    for i in range(n):
        if allow_infinite and rng.random() < 0.2:
            m = "inf"
        else:
            m = rng.randint(1, 100)
        comps.append(CurveComponent(rng.randint(0, 10), m, f"C{i + 1}"))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randint(-5, 25)
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randint(0, 25)
    return AmbientSurfaceData(rng.randint(-20, 60), rng.randint(-20, 60), tuple(comps), IntersectionMatrix.from_rows(rows))


def random_configs(seed: int, count: int, **kw) -> list[AmbientSurfaceData]:
    rng = random.Random(seed)
    return [random_ambient(rng, **kw) for _ in range(count)]


@pytest.fixture
def two_quintics_ambient():
    return AmbientSurfaceData(
        9,
        3,
        (CurveComponent(6, 69, "C1"), CurveComponent(6, 69, "C2")),
        IntersectionMatrix.from_rows([[25, 25], [25, 25]]),
    )


@pytest.fixture
def two_quintics():
    return SmoothOrbifoldSurface(
        49,
        48,
        (CurveComponent(6, 69, "C1"), CurveComponent(6, 69, "C2")),
        IntersectionMatrix.from_rows([[25, 25], [25, 25]]),
    )
