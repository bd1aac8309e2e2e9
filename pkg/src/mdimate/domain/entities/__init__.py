"""Domain entities"""

from mdimate.domain.entities.bloch_vector import BlochVector
from mdimate.domain.entities.channel import AdjointMap, ChannelCertificate, KrausChannel
from mdimate.domain.entities.density_matrix import DensityMatrix
from mdimate.domain.entities.game_setup import GameSetup
from mdimate.domain.entities.povm import PovmElement
from mdimate.domain.entities.witness import WitnessDecomposition, WitnessOperator

__all__ = [
    "AdjointMap",
    "BlochVector",
    "ChannelCertificate",
    "DensityMatrix",
    "GameSetup",
    "KrausChannel",
    "PovmElement",
    "WitnessDecomposition",
    "WitnessOperator",
]
