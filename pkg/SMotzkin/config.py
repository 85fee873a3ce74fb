"""Packaged settings: bounds, tolerances and the b-file cache location."""

import os
import json
import functools

# Global constants
CONFIG_FN = os.path.join(os.path.dirname(__file__), 'config.json')


class Config:
    """Settings loaded from the packaged JSON file."""

    def __init__(self, filename: str = CONFIG_FN):
        """
        Load and validate settings.

        :param filename: Path to the JSON config.
        """
        self.ORACLE_HARD_LIMIT: int  # Largest length the brute-force oracle accepts
        self.ORACLE_BOUND: int  # Default oracle length in the crosscheck
        self.N_MAX: int  # Default table size
        self.ORDER: int  # Default series order
        self.SERIES_K_MAX: int  # Largest height compared against series
        self.CLOSED_FORM_N_MAX: int
        self.DET_H_MAX: int
        self.REFERENCE_DET_H_MAX: int  # Largest size handed to sympy
        self.BORDERED_N_MAX: int
        self.TAU_I_MAX: int
        self.CRAMER_ORDER: int
        self.CRAMER_I_MAX: int
        self.CRAMER_MARGIN: int  # Matrix size is order + i + margin
        self.GW_K_MAX: int
        self.BINET_POLY_I_MAX: int
        self.BINET_T_VALUES: tuple[float, ...]
        self.BINET_H_MAX: int
        self.BINET_TOLERANCE: float
        self.VIETA_TOLERANCE: float
        self.SEQ_ID: str
        self.CACHE_DIR: str
        self.BFILE_URL: str
        self._load_data(filename)

    def _load_data(self, filename: str):
        """Load settings from ``filename``."""
        with open(filename, 'r') as f:
            data = json.load(f)

        self.ORACLE_HARD_LIMIT = data['ORACLE_HARD_LIMIT']
        self.ORACLE_BOUND = data['ORACLE_BOUND']
        assert 0 <= self.ORACLE_BOUND <= self.ORACLE_HARD_LIMIT

        self.N_MAX = data['N_MAX']
        self.ORDER = data['ORDER']
        self.SERIES_K_MAX = data['SERIES_K_MAX']
        self.CLOSED_FORM_N_MAX = data['CLOSED_FORM_N_MAX']
        assert self.N_MAX >= 0 and self.ORDER >= 0
        assert self.SERIES_K_MAX >= 0 and self.CLOSED_FORM_N_MAX >= 0

        self.DET_H_MAX = data['DET_H_MAX']
        self.REFERENCE_DET_H_MAX = data['REFERENCE_DET_H_MAX']
        self.BORDERED_N_MAX = data['BORDERED_N_MAX']
        self.TAU_I_MAX = data['TAU_I_MAX']
        assert self.REFERENCE_DET_H_MAX <= self.DET_H_MAX

        self.CRAMER_ORDER = data['CRAMER_ORDER']
        self.CRAMER_I_MAX = data['CRAMER_I_MAX']
        self.CRAMER_MARGIN = data['CRAMER_MARGIN']
        assert self.CRAMER_MARGIN >= 2

        self.GW_K_MAX = data['GW_K_MAX']
        self.BINET_POLY_I_MAX = data['BINET_POLY_I_MAX']
        self.BINET_T_VALUES = tuple(data['BINET_T_VALUES'])
        assert all(0 < t < 1 / 3 for t in self.BINET_T_VALUES)
        self.BINET_H_MAX = data['BINET_H_MAX']
        self.BINET_TOLERANCE = data['BINET_TOLERANCE']
        self.VIETA_TOLERANCE = data['VIETA_TOLERANCE']
        assert self.BINET_TOLERANCE > 0 and self.VIETA_TOLERANCE > 0

        self.SEQ_ID = data['SEQ_ID']
        self.CACHE_DIR = data['CACHE_DIR']
        self.BFILE_URL = data['BFILE_URL']

    def __repr__(self) -> str:
        """Return technical string representation."""
        return f'Config(oracle<={self.ORACLE_HARD_LIMIT}, n_max={self.N_MAX}, seq={self.SEQ_ID})'


@functools.lru_cache(maxsize=None)
def get_config() -> Config:
    """Return the packaged config, loaded once."""
    return Config()
