"""Game setup entity"""

from dataclasses import dataclass

from mdimate.domain.entities.density_matrix import DensityMatrix
from mdimate.domain.entities.povm import PovmElement
from mdimate.domain.entities.witness import WitnessDecomposition
from mdimate.exceptions import DimensionError


@dataclass(frozen=True, eq=False)
class GameSetup:
    """Full experimental configuration of the semi-quantum game.

    Tensor ordering is τ_s ⊗ ρ_AB ⊗ ω_t: Alice's element acts on
    (input ⊗ Alice share), Bob's on (Bob share ⊗ input).
    """
    decomp: WitnessDecomposition
    shared: DensityMatrix
    alice_povm: PovmElement
    bob_povm: PovmElement

    def __post_init__(self) -> None:
        if len(self.shared.dims) != 2:
            raise DimensionError(f"Shared state must be bipartite, got factors {self.shared.dims.factors}")
        expected_alice = self.alice_input_dim * self.alice_share_dim
        expected_bob = self.bob_share_dim * self.bob_input_dim
        if self.alice_povm.dim != expected_alice:
            raise DimensionError(f"Alice's element has dimension {self.alice_povm.dim}, expected {expected_alice}")
        if self.bob_povm.dim != expected_bob:
            raise DimensionError(f"Bob's element has dimension {self.bob_povm.dim}, expected {expected_bob}")

    @property
    def alice_input_dim(self) -> int:
        return self.decomp.d_a

    @property
    def bob_input_dim(self) -> int:
        return self.decomp.d_b

    @property
    def alice_share_dim(self) -> int:
        return self.shared.dims.factors[0]

    @property
    def bob_share_dim(self) -> int:
        return self.shared.dims.factors[1]

    @property
    def full_dims(self) -> tuple[int, int, int, int]:
        return self.alice_input_dim, self.alice_share_dim, self.bob_share_dim, self.bob_input_dim
