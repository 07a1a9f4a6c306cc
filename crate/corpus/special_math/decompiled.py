from jax.numpy import *
from jax.scipy.special import digamma
from jax.scipy.special import erf
from jax.scipy.special import erfc
from jax.scipy.special import erfinv
from jax.scipy.special import gammaln

def f(a):
    b = abs(a)
    c = b + 0.5
    d = erf(a)
    e = erfc(a)
    f = a / 4.0
    g = erfinv(f)
    h = gammaln(c)
    i = digamma(c)
    return d, e, g, h, i
