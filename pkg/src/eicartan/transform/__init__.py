from .prime_triple import (PrimeFactoredSymmetrizer, PrimeTriple, construct_prime_triple,
                           sigma_set, theta_embedding)

__all__ = ["PrimeFactoredSymmetrizer", "PrimeTriple", "construct_prime_triple", "sigma_set",
           "theta_embedding"]
