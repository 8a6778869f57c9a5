from .check_record import CheckRecord
from .grid_io import EGridFormat, GridIO
from .independent_oracles import IndependentOracles
from .numerical_verifier import NumericalVerifier
from .report_sink import ReportSink
from .residual_report import ResidualReport
from .stencil_util import StencilUtil
from .verification_suite import VerificationCell, VerificationSuite
from .verifier_settings import VerifierSettings
from .wavefunction_grid import WavefunctionGrid
