"""Party side value object"""

from enum import StrEnum


class Side(StrEnum):
    """Which party holds a measurement"""

    ALICE = "alice"
    BOB = "bob"

    def input_first(self) -> bool:
        """Alice's element acts on (input ⊗ share), Bob's on (share ⊗ input)"""
        return self == Side.ALICE
