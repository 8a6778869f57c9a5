from .boundary_analysis import BoundaryAnalysis
from .candidate_classifier import CandidateClassifier
from .classifier_settings import ClassifierSettings
from .e_infinity_growth import EInfinityGrowth
from .end_behaviour import EndBehaviour
from .superpotential_util import SuperpotentialUtil
from .system_classification import ClassifiedCandidate, SystemClassification
from .verdict import Verdict
