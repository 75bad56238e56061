from .builders import build, build_gamma_even, build_gamma_rho_odd, build_h, build_trivial_binary
from .loopless import iterate
from .storage import read_cycle, write_cycle
from .verify import cross_check, hamiltonian_oracle, lambda_bruteforce, verify_gray_cycle
from .words import CycleSpec, GrayCycle, hamming_distance, lambda_max


class VersionInfo(object):
    def __init__(self, major, minor, patch):
        self.major = major
        self.minor = minor
        self.patch = patch

    def to_tuple(self):
        return self.major, self.minor, self.patch


__version__ = "0.1.0"
version_info = VersionInfo(*__version__.split('.'))
