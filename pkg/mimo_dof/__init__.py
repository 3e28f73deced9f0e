__version__ = "0.1.0"

from .models import AntennaConfig, FadingKind, FadingLaw
from .randmat import RngStream, ChannelDraw, sample_channel, lift_block
from .region import CaseLabel, DofPair, DofRegion, HalfPlane, classify_case, compute_region, contains
from .montecarlo import Estimate
from .capacity import GapConstants, RatePair, c_star
from .verify import SuiteReport, run_suite, SUITES
from .data import ResultRepository
