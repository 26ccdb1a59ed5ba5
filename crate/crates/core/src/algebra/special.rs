//! Factorials, binomials, Pochhammer symbols and their q-analogues.

use num_traits::{One, Zero};

use super::gaussian::G;
use super::rational::{int, rat_pow, Rational};
use crate::error::{Error, Result};

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, j| acc * int(j))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(Rational::one(), |acc, j| acc * int((n - j) as i64) / int(j as i64 + 1))
}

/// Rising factorial `(a)_k = a(a+1)···(a+k−1)`.
pub fn pochhammer(a: &G, k: usize) -> G {
    let mut acc = G::one();
    for j in 0..k {
        acc = &acc * &(a + &G::from_int(j as i64));
    }
    acc
}

/// `(a; q)_k = (1−a)(1−aq)···(1−aq^{k−1})`.
pub fn q_pochhammer(a: &G, q: &Rational, k: usize) -> G {
    let mut acc = G::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = &acc * &(&G::one() - &term);
        term = term.scale(q);
    }
    acc
}

/// Gaussian binomial `(q;q)_n / ((q;q)_k (q;q)_{n−k})`.
pub fn q_binomial(n: usize, k: usize, q: &Rational) -> Result<Rational> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    // Pascal rule: [n,k] = [n−1,k−1] + q^k [n−1,k]; avoids dividing by (1−q).
    let mut row = vec![Rational::one()];
    for m in 1..=n {
        let mut next = vec![Rational::one(); m + 1];
        for j in 1..m {
            next[j] = &row[j - 1] + rat_pow(q, j as i64)? * &row[j];
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// `[n]_q = 1 + q + ··· + q^{n−1}`.
pub fn q_number(n: usize, q: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut pw = Rational::one();
    for _ in 0..n {
        acc += &pw;
        pw *= q;
    }
    acc
}

/// `(−1)^k`.
pub fn sign(k: usize) -> G {
    if k.is_multiple_of(2) {
        G::one()
    } else {
        G::from_int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&G::from_frac(7, 3), 0), G::one());
        assert_eq!(pochhammer(&G::one(), 3), G::from_int(6));
        assert_eq!(pochhammer(&G::from_int(-2), 3), G::zero());
    }

    #[test]
    fn q_pochhammer_examples() {
        let q = rat(1, 2);
        assert_eq!(q_pochhammer(&G::from_frac(5, 7), &q, 0), G::one());
        assert_eq!(q_pochhammer(&G::from(&q), &q, 2), G::from_frac(3, 8));
        assert_eq!(q_pochhammer(&G::one(), &q, 1), G::zero());
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(5, 0, &rat(2, 9)).unwrap(), int(1));
        assert_eq!(q_binomial(2, 1, &rat(1, 3)).unwrap(), rat(4, 3));
        assert_eq!(q_binomial(3, 1, &rat(1, 2)).unwrap(), rat(7, 4));
        assert_eq!(q_binomial(2, 3, &rat(1, 2)), Err(Error::BinomialRange { n: 2, k: 3 }));
    }

    #[test]
    fn q_binomial_matches_pochhammer_quotient() {
        let q = rat(3, 5);
        let qq = G::from(&q);
        for n in 0..7 {
            for k in 0..=n {
                let num = q_pochhammer(&qq, &q, n);
                let den = &q_pochhammer(&qq, &q, k) * &q_pochhammer(&qq, &q, n - k);
                assert_eq!(G::from(q_binomial(n, k, &q).unwrap()), num.checked_div(&den).unwrap());
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(factorial(5), int(120));
        assert_eq!(q_number(3, &rat(1, 2)), rat(7, 4));
    }
}
