"""Dense integer polynomials indexed by degree (h-vectors, rook polynomials)."""

from __future__ import annotations

from dataclasses import dataclass


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficient vector; coeffs[k] is the degree-k coefficient.

    Trailing zeros are trimmed on construction, so two equal polynomials
    always compare equal. The zero polynomial has an empty coefficient tuple
    and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                t = "t" if k == 1 else f"t^{k}"
                parts.append(t if c == 1 else f"{c}{t}")
        return " + ".join(parts)

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "IntPolynomial":
        """Build from a {degree: coefficient} histogram."""
        if not counts:
            return cls(())
        top = max(counts)
        return cls(tuple(counts.get(k, 0) for k in range(top + 1)))
