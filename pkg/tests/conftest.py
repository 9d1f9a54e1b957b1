"""Shared fixtures: the four polyominoes every module is tested against."""

import pytest

from polyrook import FrameSpec, NorthEastPath, build_frame, build_polyomino, rectangle


@pytest.fixture(scope="session")
def c1():
    """Single cell with lower-left corner (1,1)."""
    return build_polyomino([(1, 1)])


@pytest.fixture(scope="session")
def q2():
    """The 2x2 square of cells."""
    return rectangle(3, 3)


@pytest.fixture(scope="session")
def p4():
    """4x4 frame with a one-cell hole."""
    return build_frame(
        FrameSpec(
            m=4,
            n=4,
            s1=NorthEastPath(((2, 2), (2, 3), (3, 3))),
            s2=NorthEastPath(((2, 2), (3, 2), (3, 3))),
        )
    )


@pytest.fixture(scope="session")
def p5():
    """5x5 frame with a 2x2 hole."""
    return build_frame(
        FrameSpec(
            m=5,
            n=5,
            s1=NorthEastPath(((2, 2), (2, 3), (2, 4), (3, 4), (4, 4))),
            s2=NorthEastPath(((2, 2), (3, 2), (4, 2), (4, 3), (4, 4))),
        )
    )
