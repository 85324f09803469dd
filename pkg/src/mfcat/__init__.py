"""mfcat: exact graded matrix factorizations of ADE singularities.

Constructs the indecomposable graded matrix factorizations of the ADE
weighted-homogeneous polynomials, computes morphism spaces in the graded
homotopy category by exact linear algebra over Q(i), and verifies the
categorical structure: AR triangles, Serre duality, a Bridgeland stability
condition, and strongly exceptional collections.
"""

__version__ = "0.1.0"
