"""Exact Bernoulli/Laurent algebra, zeta references and Borel summation of
Bernoulli-number series."""
from .bernoulli import bernoulli, bernoulli_second, beta_plus
from .exact import BigRational, gen_binom, sign

__version__ = "0.1.0"

__all__ = ["BigRational", "bernoulli", "bernoulli_second", "beta_plus", "gen_binom", "sign"]
