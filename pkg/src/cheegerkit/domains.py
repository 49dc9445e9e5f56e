"""Stock test domains.

Every function returns a fresh JordanPolygon in counterclockwise
orientation.  Dimensions are chosen so the interesting radii and gap
widths come out as exact binary fractions.
"""

from __future__ import annotations

import math

from .polygon import JordanPolygon


def unit_square() -> JordanPolygon:
    return JordanPolygon.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)])


def rectangle() -> JordanPolygon:
    """2 x 1 rectangle."""
    return JordanPolygon.from_coords([(0, 0), (2, 0), (2, 1), (0, 1)])


def regular_polygon(n: int, circumradius: float = 1.0) -> JordanPolygon:
    pts = [(circumradius * math.cos(2 * math.pi * k / n),
            circumradius * math.sin(2 * math.pi * k / n)) for k in range(n)]
    return JordanPolygon.from_coords(pts)


def equilateral_triangle(side: float = 1.0) -> JordanPolygon:
    return JordanPolygon.from_coords(
        [(0, 0), (side, 0), (0.5 * side, side * math.sqrt(3) / 2)])


def l_shape() -> JordanPolygon:
    """2 x 1 rectangle with the square notch [1,2] x [0.5,1] removed."""
    return JordanPolygon.from_coords(
        [(0, 0), (2, 0), (2, 0.5), (1, 0.5), (1, 1), (0, 1)])


def keyed_square() -> JordanPolygon:
    """Unit square with a 0.2-wide, 0.6-long corridor on the right.

    At radius 0.1 the corridor's spine is a length-0.5 tendril attached
    to the square's eroded core at the mouth pinch (1, 0.5).
    """
    return JordanPolygon.from_coords(
        [(0, 0), (1, 0), (1, 0.4), (1.6, 0.4), (1.6, 0.6), (1, 0.6),
         (1, 1), (0, 1)])


def dumbbell() -> JordanPolygon:
    """Two unit squares joined by a 0.1-wide corridor.

    The inner set disconnects for radii in (0.05, 0.5].
    """
    return JordanPolygon.from_coords(
        [(0, 0), (1, 0), (1, 0.45), (1.5, 0.45), (1.5, 0), (2.5, 0),
         (2.5, 1), (1.5, 1), (1.5, 0.55), (1, 0.55), (1, 1), (0, 1)])


def bridged_squares() -> JordanPolygon:
    """Two unit squares joined by a 0.2-wide corridor: wide enough that
    at radius 0.1 the corridor spine survives as a handle between the
    two eroded cores."""
    return JordanPolygon.from_coords(
        [(0, 0), (1, 0), (1, 0.4), (1.5, 0.4), (1.5, 0), (2.5, 0),
         (2.5, 1), (1.5, 1), (1.5, 0.6), (1, 0.6), (1, 1), (0, 1)])


def staircase() -> JordanPolygon:
    """Unit square with two descending steps on the right.

    Step half-widths 0.25 and 0.125 produce tendrils of lengths 0.25
    and 0.125 at those radii, giving two separated affine stretches in
    the isoperimetric profile.
    """
    return JordanPolygon.from_coords(
        [(0, 0), (1.75, 0), (1.75, 0.25), (1.5, 0.25), (1.5, 0.5),
         (1, 0.5), (1, 1), (0, 1)])
