//! Joint eigenvectors of the Cherednik operators straight from their
//! matrices on the monomial basis, with no raising or braid operators.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::construct::eigenvalues;
use crate::dunkl::{cd, Params};
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Rational};
use crate::weyl::{triangular_key, Composition};

/// Matrices of `d_1, …, d_N` on monomials of degree at most `cutoff`.
///
/// Basis order is by degree, then by the sorted partition, then by the
/// composition itself, all lexicographic. Every `d_j` is upper triangular in
/// this order.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    params: Params,
    n: usize,
    cutoff: u32,
    basis: Vec<Composition>,
    index: HashMap<Composition, usize>,
    // mats[j][col] = sparse column of d_j x^{basis[col]}
    mats: Vec<Vec<Vec<(usize, Rational)>>>,
}

impl OperatorMatrix {
    pub fn build(params: &Params, n: usize, cutoff: u32) -> Result<OperatorMatrix> {
        if n == 0 {
            return Err(Error::InvalidParams("N must be positive".into()));
        }
        let mut basis = Composition::all_up_to_degree(n, cutoff);
        basis.sort_by_key(triangular_key);
        let index: HashMap<Composition, usize> =
            basis.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mats = (0..n)
            .map(|j| {
                basis
                    .par_iter()
                    .map(|nu| {
                        let img = cd(params, j, &Poly::monomial(nu));
                        let mut col: Vec<(usize, Rational)> = img
                            .terms()
                            .map(|(e, c)| (index[&Composition::new(e.clone())], c.clone()))
                            .collect();
                        col.sort_by_key(|(i, _)| *i);
                        col
                    })
                    .collect()
            })
            .collect();
        Ok(OperatorMatrix {
            params: params.clone(),
            n,
            cutoff,
            basis,
            index,
            mats,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn basis(&self) -> &[Composition] {
        &self.basis
    }

    pub fn position(&self, mu: &Composition) -> Option<usize> {
        self.index.get(mu).copied()
    }

    /// Coefficient of `x^{basis[row]}` in `d_j x^{basis[col]}`.
    pub fn entry(&self, j: usize, row: usize, col: usize) -> Rational {
        self.mats[j][col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Dense copy of the matrix of `d_j`.
    pub fn dense(&self, j: usize) -> Vec<Vec<Rational>> {
        let m = self.basis.len();
        let mut out = vec![vec![Rational::zero(); m]; m];
        for (col, entries) in self.mats[j].iter().enumerate() {
            for (row, c) in entries {
                out[*row][col] = c.clone();
            }
        }
        out
    }

    /// No entry sits below the diagonal.
    pub fn is_triangular(&self) -> bool {
        self.mats
            .iter()
            .all(|m| m.iter().enumerate().all(|(col, e)| e.iter().all(|(row, _)| *row <= col)))
    }

    /// Back-substitution for the eigenvector labelled `mu`, monic at `x^mu`.
    pub fn solve(&self, mu: &Composition) -> Result<Poly> {
        self.solve_with_spectrum(mu, &eigenvalues(&self.params, mu))
    }

    /// Back-substitution with top monomial `x^mu` and a prescribed spectrum.
    pub fn solve_with_spectrum(&self, mu: &Composition, lambda: &[Rational]) -> Result<Poly> {
        if mu.n() != self.n || lambda.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: if mu.n() != self.n { mu.n() } else { lambda.len() },
            });
        }
        let top = self.position(mu).ok_or_else(|| {
            Error::InvalidParams(format!("cutoff {} below |mu| = {}", self.cutoff, mu.degree()))
        })?;
        // rows[j][i] = entries of row i of d_j restricted to columns ≤ top
        let mut c: Vec<Rational> = vec![Rational::zero(); top + 1];
        c[top] = Rational::one();
        let rows: Vec<Vec<Vec<(usize, Rational)>>> = (0..self.n)
            .map(|j| {
                let mut r = vec![Vec::new(); top + 1];
                for (col, entries) in self.mats[j].iter().enumerate().take(top + 1) {
                    for (row, v) in entries {
                        r[*row].push((col, v.clone()));
                    }
                }
                r
            })
            .collect();
        for i in (0..top).rev() {
            let mut solved = false;
            for j in 0..self.n {
                let mut diag = Rational::zero();
                let mut rhs = Rational::zero();
                for (col, v) in &rows[j][i] {
                    if *col == i {
                        diag = v.clone();
                    } else if *col > i {
                        rhs -= v * &c[*col];
                    }
                }
                let pivot = diag - &lambda[j];
                if !pivot.is_zero() {
                    c[i] = rhs / pivot;
                    solved = true;
                    break;
                }
            }
            if !solved {
                return Err(Error::DegenerateEigenvalue(format!(
                    "{} shares the spectrum of {mu} under {}",
                    self.basis[i], self.params
                )));
            }
        }
        let h = Poly::from_terms(
            self.n,
            c.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (self.basis[i].entries().to_vec(), v)),
        )?;
        for (j, l) in lambda.iter().enumerate() {
            let r = cd(&self.params, j, &h) - h.scale(l);
            if !r.is_zero() {
                return Err(Error::DegenerateEigenvalue(format!(
                    "back-substituted vector for {mu} fails d_{} with residual {r}",
                    j + 1
                )));
            }
        }
        Ok(h)
    }
}

/// The joint eigenvector of `d_1, …, d_N` labelled `mu`, monic at `x^mu`.
pub fn triangular_eigensolve(params: &Params, mu: &Composition, cutoff: u32) -> Result<Poly> {
    if cutoff < mu.degree() {
        return Err(Error::InvalidParams(format!(
            "cutoff {cutoff} below |mu| = {}",
            mu.degree()
        )));
    }
    OperatorMatrix::build(params, mu.n(), mu.degree())?.solve(mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::nonsym_poly;
    use crate::exactpoly::{int, rat};

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn small_solutions() {
        let p = Params::a_type(rat(3, 7), rat(1, 2)).unwrap();
        assert_eq!(triangular_eigensolve(&p, &c(&[0, 0]), 0).unwrap(), Poly::one(2));
        let h = triangular_eigensolve(&p, &c(&[1, 0]), 2).unwrap();
        assert_eq!(h.coeff(&[1, 0]), int(1));
        assert_eq!(h.coeff(&[0, 1]), rat(3, 10));
        assert_eq!(h.len(), 2);
        assert!(matches!(
            triangular_eigensolve(&p, &c(&[2, 0]), 1),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn triangular_and_matches_construction() {
        for p in [
            Params::a_type(rat(3, 7), rat(1, 2)).unwrap(),
            Params::b_type(rat(5, 3), rat(1, 4), int(1)).unwrap(),
        ] {
            let m = OperatorMatrix::build(&p, 3, 3).unwrap();
            assert!(m.is_triangular());
            for mu in m.basis().to_vec() {
                let h = m.solve(&mu).unwrap();
                assert_eq!(h, nonsym_poly(&p, &mu).unwrap().poly, "{mu}");
            }
        }
    }

    #[test]
    fn borrowed_spectrum_hits_zero_pivot() {
        let p = Params::a_type(rat(3, 7), rat(1, 2)).unwrap();
        let m = OperatorMatrix::build(&p, 2, 1).unwrap();
        let other = eigenvalues(&p, &c(&[0, 1]));
        assert!(matches!(
            m.solve_with_spectrum(&c(&[1, 0]), &other),
            Err(Error::DegenerateEigenvalue(_))
        ));
    }

    #[test]
    fn b_type_first_excitation() {
        let p = Params::b_type(rat(3, 7), rat(2, 5), rat(1, 2)).unwrap();
        let h = triangular_eigensolve(&p, &c(&[1, 0]), 1).unwrap();
        assert_eq!(h, Poly::var(2, 0));
    }
}
