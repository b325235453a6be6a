"""Module defining the custom exceptions used in flatbgg"""


class ContractError(Exception):
    """flatbgg errors having to do with violated preconditions of an operation"""


class SingularRestrictionError(ContractError):
    """flatbgg errors having to do with inverting a map on a subspace it does not
    map injectively"""


class AlgebraError(Exception):
    """flatbgg errors having to do with structure constants and gradings"""


class RepresentationError(Exception):
    """flatbgg errors having to do with representations and their scope"""


class FlatModelError(Exception):
    """flatbgg errors having to do with the polynomial calculus on the flat model"""


class InvariantError(Exception):
    """flatbgg errors raised when an identity that must hold by construction fails"""


class PairingError(Exception):
    """flatbgg errors having to do with pairings of modules"""


class DeformationError(Exception):
    """flatbgg errors having to do with rejected deformation input"""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConfigError(Exception):
    """flatbgg errors having to do with job configuration and expression parsing"""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ReadError(Exception):
    """flatbgg errors having to do with file reading"""
