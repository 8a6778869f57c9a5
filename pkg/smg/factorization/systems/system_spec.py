from typing import Any, Dict, Optional

from .e_system_name import ECoordinateType, ESystemName


class SystemSpec:
    """
    One of the physical systems in the catalog, together with its quantum numbers, potential parameters and units.

    .. note::
        Only the parameters that the system uses may be given, and all of those it uses must be given:
        C for the linear potential, Z and ã₀ for hydrogen, D and k₀ for Morse; m for plane polar coordinates and
        l for spherical ones.
    """

    # CONSTANTS

    MAX_QUANTUM_NUMBER = 20  # type: int

    # CONSTRUCTOR

    def __init__(self, name: ESystemName, *, l: Optional[int] = None, m: Optional[int] = None,
                 C: Optional[float] = None, Z: Optional[float] = None, a0_tilde: Optional[float] = None,
                 D: Optional[float] = None, k0: Optional[float] = None, mass: float = 1.0, hbar: float = 1.0):
        """
        Construct a system specification.

        :param name:        The system.
        :param l:           The angular momentum quantum number (spherical systems only).
        :param m:           The magnetic quantum number (plane polar systems only).
        :param C:           The slope of the linear potential V(x) = Cx (energy/length).
        :param Z:           The nuclear charge (hydrogen only).
        :param a0_tilde:    The reduced Bohr radius ã₀ = ħ²/(Me²) (hydrogen only).
        :param D:           The depth of the Morse potential.
        :param k0:          The inverse range of the Morse potential.
        :param mass:        The (reduced) mass M.
        :param hbar:        The reduced Planck constant ħ.
        :raises ValueError: If the parameters do not match the system, or any of them is out of range.
        """
        self.__name = name            # type: ESystemName
        self.__l = l                  # type: Optional[int]
        self.__m = m                  # type: Optional[int]
        self.__C = C                  # type: Optional[float]
        self.__Z = Z                  # type: Optional[float]
        self.__a0_tilde = a0_tilde    # type: Optional[float]
        self.__D = D                  # type: Optional[float]
        self.__k0 = k0                # type: Optional[float]
        self.__mass = float(mass)     # type: float
        self.__hbar = float(hbar)     # type: float

        coordinate = name.get_coordinate_type()
        SystemSpec.__check_presence("l", l, coordinate is ECoordinateType.SPHERICAL, name)
        SystemSpec.__check_presence("m", m, coordinate is ECoordinateType.PLANE_POLAR, name)
        SystemSpec.__check_presence("C", C, name is ESystemName.LINEAR, name)
        SystemSpec.__check_presence("Z", Z, name is ESystemName.HYDROGEN, name)
        SystemSpec.__check_presence("a0_tilde", a0_tilde, name is ESystemName.HYDROGEN, name)
        SystemSpec.__check_presence("D", D, name is ESystemName.MORSE, name)
        SystemSpec.__check_presence("k0", k0, name is ESystemName.MORSE, name)

        if l is not None and not 0 <= l <= self.MAX_QUANTUM_NUMBER:
            raise ValueError("l must be in [0, {}], got {}".format(self.MAX_QUANTUM_NUMBER, l))
        if m is not None and abs(m) > self.MAX_QUANTUM_NUMBER:
            raise ValueError("|m| must be at most {}, got {}".format(self.MAX_QUANTUM_NUMBER, m))
        for param_name, value in (("C", C), ("Z", Z), ("a0_tilde", a0_tilde), ("D", D), ("k0", k0),
                                  ("mass", mass), ("hbar", hbar)):
            if value is not None and not value > 0.0:
                raise ValueError("{} must be positive, got {}".format(param_name, value))

    # SPECIAL METHODS

    def __repr__(self) -> str:
        return "SystemSpec({})".format(self.describe())

    # PUBLIC METHODS

    def describe(self) -> str:
        """
        Make a compact description of the system and its parameters, e.g. "hydrogen l=2 Z=1 a0_tilde=1".

        :return:    The description.
        """
        parts = [self.__name.value]
        for param_name, value in (("l", self.__l), ("m", self.__m), ("C", self.__C), ("Z", self.__Z),
                                  ("a0_tilde", self.__a0_tilde), ("D", self.__D), ("k0", self.__k0)):
            if value is not None:
                parts.append("{}={:g}".format(param_name, value))
        if self.__mass != 1.0:
            parts.append("mass={:g}".format(self.__mass))
        if self.__hbar != 1.0:
            parts.append("hbar={:g}".format(self.__hbar))
        return " ".join(parts)

    def get_a0_tilde(self) -> Optional[float]:
        return self.__a0_tilde

    def get_C(self) -> Optional[float]:
        return self.__C

    def get_coordinate_type(self) -> ECoordinateType:
        return self.__name.get_coordinate_type()

    def get_D(self) -> Optional[float]:
        return self.__D

    def get_hbar(self) -> float:
        return self.__hbar

    def get_k0(self) -> Optional[float]:
        return self.__k0

    def get_l(self) -> Optional[int]:
        return self.__l

    def get_m(self) -> Optional[int]:
        return self.__m

    def get_mass(self) -> float:
        return self.__mass

    def get_name(self) -> ESystemName:
        return self.__name

    def get_parameters(self) -> Dict[str, Any]:
        """
        Get the parameters of the system as a dictionary that from_parameters can turn back into an equal system.

        :return:    The parameters, keyed by name (including "system", "mass" and "hbar").
        """
        return {
            "system": self.__name.value, "l": self.__l, "m": self.__m, "C": self.__C, "Z": self.__Z,
            "a0_tilde": self.__a0_tilde, "D": self.__D, "k0": self.__k0, "mass": self.__mass, "hbar": self.__hbar
        }

    def get_Z(self) -> Optional[float]:
        return self.__Z

    # PUBLIC STATIC METHODS

    @staticmethod
    def from_parameters(parameters: Dict[str, Any]) -> "SystemSpec":
        """
        Make a system from a dictionary of parameters of the form produced by get_parameters.

        :param parameters:              The parameters (absent or None entries are treated as not given).
        :return:                        The system.
        :raises UnsupportedSystemError: If the system name is not recognised.
        :raises ValueError:             If the parameters do not match the system.
        """
        return SystemSpec(
            ESystemName.parse(parameters["system"]), l=parameters.get("l"), m=parameters.get("m"),
            C=parameters.get("C"), Z=parameters.get("Z"), a0_tilde=parameters.get("a0_tilde"),
            D=parameters.get("D"), k0=parameters.get("k0"), mass=parameters.get("mass", 1.0),
            hbar=parameters.get("hbar", 1.0)
        )

    # PRIVATE STATIC METHODS

    @staticmethod
    def __check_presence(param_name: str, value: object, required: bool, name: ESystemName) -> None:
        if required and value is None:
            raise ValueError("System '{}' requires the parameter {}".format(name.value, param_name))
        elif not required and value is not None:
            raise ValueError("System '{}' does not take the parameter {}".format(name.value, param_name))
