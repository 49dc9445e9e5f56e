"""Exception hierarchy shared by every module.

All errors raised on purpose derive from ``CheegerKitError`` so callers can
catch one base class.  The split below mirrors how the CLI maps failures to
exit codes: bad input versus a geometric hypothesis that did not hold.
"""

from __future__ import annotations


class CheegerKitError(Exception):
    """Base class for all deliberate failures."""


class InputError(CheegerKitError):
    """Malformed polygon data: too few vertices, self-intersection,
    repeated points, unparsable file."""


class DomainError(CheegerKitError):
    """A numeric argument outside its admissible range (kappa <= 0,
    radius beyond the inradius, t outside [0, 1], ...)."""


class VolumeRangeError(DomainError):
    """Requested volume falls outside the attainable interval at the
    given curvature.  Carries the interval for diagnostics."""

    def __init__(self, volume: float, lo: float, hi: float):
        self.volume = volume
        self.lo = lo
        self.hi = hi
        super().__init__(
            f"volume {volume!r} outside attainable interval [{lo!r}, {hi!r}]"
        )


class SubcriticalError(CheegerKitError):
    """Curvature below the domain's Cheeger constant: the shrink-or-die
    alternative kills every candidate, no minimizer with nonempty
    interior exists."""

    def __init__(self, kappa: float, cheeger: float | None = None):
        self.kappa = kappa
        self.cheeger = cheeger
        msg = f"kappa = {kappa!r} is below the Cheeger constant"
        if cheeger is not None:
            msg += f" (h = {cheeger!r})"
        super().__init__(msg)


class CharacterizationError(CheegerKitError):
    """The no-neck hypothesis fails at the requested radius, so the
    disk-sum description of minimizers does not apply.  ``band`` is a
    (lo, hi] interval of radii over which the inner set is disconnected,
    when one was computed."""

    def __init__(self, msg: str, band: tuple[float, float] | None = None):
        self.band = band
        if band is not None:
            msg += (f"; inner set disconnected for radii in "
                    f"({band[0]:.12g}, {band[1]:.12g}]")
        super().__init__(msg)


class ReachViolationError(CheegerKitError):
    """Disk sum of a core is not embedded: some concave boundary arc has
    radius below the disk radius, or the offset self-intersects."""


class StructuralError(CheegerKitError):
    """Internal consistency check failed (medial graph not a tree,
    boundary walk did not close, ...).  Indicates a bug or a polygon at
    the edge of float tolerance, not bad user input."""
