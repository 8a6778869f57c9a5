from .classification_window import ClassificationWindow
from .domain_end import DomainEnd, EEndKind
from .e_system_name import ECoordinateType, ESystemName
from .e_verdict_status import EVerdictStatus
from .system_catalog import SystemCatalog
from .system_spec import SystemSpec
from .verdict_table import VerdictRow, VerdictTable
