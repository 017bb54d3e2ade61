from src.qnm1d.field import Qnm1D
from src.qnm1d.inner_product import normalize_qnm_1d, qnm_inner_product_1d
from src.qnm1d.mode_length import mode_length_1d
from src.qnm1d.solver import find_qnm_1d, find_qnms_1d, seed_qnm_1d
from src.qnm1d.transfer import fabry_perot_frequency, interface_states, qnm_condition_1d, transfer_matrix

__all__ = [
    "Qnm1D",
    "normalize_qnm_1d",
    "qnm_inner_product_1d",
    "mode_length_1d",
    "find_qnm_1d",
    "find_qnms_1d",
    "seed_qnm_1d",
    "fabry_perot_frequency",
    "interface_states",
    "qnm_condition_1d",
    "transfer_matrix",
]
