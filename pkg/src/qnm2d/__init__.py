from src.qnm2d.field import Qnm2D, evaluate_qnm_field
from src.qnm2d.inner_product import (
    default_norm_radius,
    epsilon_weighted_integrals,
    normalize_qnm_2d,
    qnm_inner_product_2d,
    qnm_inner_products_2d,
)
from src.qnm2d.mesh import ScattererMesh, build_scatterer_mesh
from src.qnm2d.operator import assemble_ls_operator, cell_kernel, green_matrix, self_cell_integral
from src.qnm2d.solver import find_qnm_2d, operator_residual, seed_qnm_2d

__all__ = [
    "Qnm2D",
    "evaluate_qnm_field",
    "default_norm_radius",
    "epsilon_weighted_integrals",
    "normalize_qnm_2d",
    "qnm_inner_product_2d",
    "qnm_inner_products_2d",
    "ScattererMesh",
    "build_scatterer_mesh",
    "assemble_ls_operator",
    "cell_kernel",
    "green_matrix",
    "self_cell_integral",
    "find_qnm_2d",
    "operator_residual",
    "seed_qnm_2d",
]
