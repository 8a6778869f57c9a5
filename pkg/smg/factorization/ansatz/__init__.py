from .ansatz_util import AnsatzUtil
from .candidate import Candidate
from .e_zeta_family import EZetaFamily
from .frame_offset import FrameOffset
from .parameter_solver import ParameterSolver
from .zeta_map import ZetaMap
from .zeta_point import ZetaPoint
