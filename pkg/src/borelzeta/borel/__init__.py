"""Borel transforms, Borel sums and the algebra of Borel-summable series."""
from .backend import FLOAT, MPBackend, backend_for
from .kernels import (BorelKernel, ClosedFormKernel, ConvolutionKernel, LinearKernel,
                      ProductKernel)
from .registry import get_kernel, kernel_ids, registry_series
from .series import (FormalSeries, binomial_convolution, borel_shift, borel_transform_coeffs,
                     cauchy_product, check_transform_consistency, id_series,
                     linear_combine_series, solve_convolution)
from .summation import (BorelSumResult, Status, borel_sum, borel_sum_dn,
                        inner_double_integral, nested_integral_3_53)

__all__ = [
    "FLOAT", "MPBackend", "backend_for",
    "BorelKernel", "ClosedFormKernel", "ConvolutionKernel", "LinearKernel", "ProductKernel",
    "get_kernel", "kernel_ids", "registry_series",
    "FormalSeries", "binomial_convolution", "borel_shift", "borel_transform_coeffs",
    "cauchy_product", "check_transform_consistency", "id_series", "linear_combine_series",
    "solve_convolution",
    "BorelSumResult", "Status", "borel_sum", "borel_sum_dn", "inner_double_integral",
    "nested_integral_3_53",
]
