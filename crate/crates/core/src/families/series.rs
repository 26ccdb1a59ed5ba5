//! Products that appear as hypergeometric terms with polynomial arguments.

use crate::algebra::{Carrier, Laurent, Poly, Rational, G};

/// `(base)_j = base (base+1) ··· (base+j−1)` for a polynomial `base`.
pub fn rising(base: &Poly, j: usize) -> Poly {
    (0..j).fold(Poly::one(), |acc, i| {
        &acc * &(base + &Poly::constant(G::from_int(i as i64)))
    })
}

/// `(base; q)_j = (1 − base)(1 − base·q) ··· (1 − base·q^{j−1})`.
pub fn q_rising<E: Carrier>(base: &E, q: &Rational, j: usize) -> E {
    let mut acc = E::one();
    let mut term = base.clone();
    let qg = G::from(q);
    for _ in 0..j {
        acc = acc.mul(&E::one().sub(&term));
        term = term.scale(&qg);
    }
    acc
}

/// `c·x + d` as a polynomial in `x`.
pub fn affine(c: G, d: G) -> Poly {
    Poly::linear(c, d)
}

/// `c·z` as a Laurent polynomial.
pub fn cz(c: &G) -> Laurent {
    Laurent::monomial(c.clone(), 1)
}

/// `c/z` as a Laurent polynomial.
pub fn c_over_z(c: &G) -> Laurent {
    Laurent::monomial(c.clone(), -1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn products() {
        // (x)_2 = x² + x
        assert_eq!(rising(&Poly::x(), 2), Poly::from_ints(&[0, 1, 1]));
        // (x; 1/2)_2 = (1 − x)(1 − x/2)
        let expect = Poly::new(vec![G::one(), G::from_frac(-3, 2), G::from_frac(1, 2)]);
        assert_eq!(q_rising(&Poly::x(), &rat(1, 2), 2), expect);
        assert_eq!(q_rising(&Poly::x(), &rat(1, 2), 0), Poly::one());
    }
}
