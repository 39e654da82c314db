from __future__ import annotations
from sympy import MatrixBase
from typing import Protocol, runtime_checkable


@runtime_checkable
class GradedModuleProtocol(Protocol):
    """Duck typed Protocol showing what a graded free module must do."""
    summands: tuple[tuple[int, str, int], ...]

    @property
    def rank(self) -> int:
        """Total multiplicity."""
        ...

    def twists(self) -> dict[int, int]:
        """Multiplicity per twist, aggregated over sources."""
        ...

    def twist(self, s: int) -> GradedModuleProtocol:
        """Shift every twist by s."""
        ...

    def pack(self) -> bytes:
        """Pack the module into bytes."""
        ...

    @classmethod
    def unpack(cls, data: bytes, /, *, inject: dict = {}) -> GradedModuleProtocol:
        """Unpack a module from bytes."""
        ...


@runtime_checkable
class ComplexProtocol(Protocol):
    """Duck typed Protocol showing what a graded complex must do."""
    positions: tuple[GradedModuleProtocol, ...]
    resolved_name: str
    minimality: str
    codim: int
    assumptions: tuple[str, ...]

    def __len__(self) -> int:
        """Number of positions."""
        ...

    def __getitem__(self, k: int) -> GradedModuleProtocol:
        """Position k; empty beyond the last position."""
        ...

    def table(self) -> list[dict[int, int]]:
        """Betti table: one twist -> multiplicity dict per position."""
        ...

    def with_positions(self, positions, **changes) -> ComplexProtocol:
        """Copy with new positions and optionally other fields."""
        ...


@runtime_checkable
class MatrixChainProtocol(Protocol):
    """Duck typed Protocol showing what a chain of explicit
        differentials must provide for exactness checks.
    """
    matrices: tuple
    dims: tuple[int, ...]

    def differential(self, k: int) -> MatrixBase:
        """The matrix of the map from position k to position k-1."""
        ...
