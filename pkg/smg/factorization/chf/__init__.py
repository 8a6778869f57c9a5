from .asymptotic_term import AsymptoticTerm
from .chf_params import CHFParams
from .chf_self_test import ChfSelfTest, IdentityResult
from .chf_util import ChfUtil
from .e_chf_kind import ECHFKind
from .eval_policy import EvalPolicy
from .gamma_util import GammaUtil
from .greek_coefficients import GreekCoefficients
from .multiprecision_util import MultiPrecisionUtil
