"""kirwanlab: exact equivariant-cohomology computations for circle actions
on products of complex projective spaces.

Core layers:

* :mod:`kirwanlab.exactcore` -- rational polynomials, quotient rings, linear algebra
* :mod:`kirwanlab.hamspace` -- actions, fixed points, chambers, restriction
* :mod:`kirwanlab.kalkman` -- localization integrals and contribution tables
* :mod:`kirwanlab.bdc` -- pairing matrices and diagonal-class families
* :mod:`kirwanlab.diagonal` -- the two-torus CP^1 ring and product composition
* :mod:`kirwanlab.traintrack` -- weighted branched 1-manifolds

The HTTP service lives in :mod:`kirwanlab.service`; the command line client in
:mod:`kirwanlab.cli`.
"""

__version__ = "0.1.0"
