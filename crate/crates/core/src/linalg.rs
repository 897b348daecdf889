//! Dense Gaussian elimination over an exact field.

use crate::scalar::Scalar;

/// Reduced row-echelon form of an augmented or plain matrix.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pub rows: Vec<Vec<S>>,
    pub pivots: Vec<usize>,
}

/// Row-reduces `m` in place (fully reduced, pivots scaled to 1).
pub fn rref<S: Scalar>(mut m: Vec<Vec<S>>) -> Echelon<S> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut().skip(c) {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, t) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !t.is_zero() {
                    *x = x.clone() - f.clone() * t.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: m, pivots }
}

pub fn rank<S: Scalar>(m: Vec<Vec<S>>) -> usize {
    rref(m).pivots.len()
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone)]
pub enum Solution<S> {
    /// Unique solution.
    Unique(Vec<S>),
    /// Consistent, with a solution space of the given dimension (> 0).
    Underdetermined {
        particular: Vec<S>,
        nullity: usize,
    },
    Inconsistent,
}

/// Solves `A x = b` exactly. `a` is row-major with `a.len() == b.len()`.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Solution<S> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let e = rref(aug);
    if e.pivots.last() == Some(&ncols) {
        return Solution::Inconsistent;
    }
    let mut x = vec![S::zero(); ncols];
    for (i, &c) in e.pivots.iter().enumerate() {
        x[c] = e.rows[i][ncols].clone();
    }
    let nullity = ncols - e.pivots.len();
    if nullity == 0 {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined { particular: x, nullity }
    }
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace<S: Scalar>(a: Vec<Vec<S>>, ncols: usize) -> Vec<Vec<S>> {
    if a.is_empty() {
        return (0..ncols)
            .map(|i| (0..ncols).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
    }
    let e = rref(a);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); ncols];
            v[f] = S::one();
            for (i, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.rows[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![int(3), int(5)];
        match solve(&a, &b) {
            Solution::Unique(x) => assert_eq!(x, vec![rat(4, 5), rat(7, 5)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(solve(&a, &[int(1), int(2), int(3)]), Solution::Unique(_)));
        assert!(matches!(solve(&a, &[int(1), int(2), int(4)]), Solution::Inconsistent));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(a.clone(), 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let dot: Rational = row.iter().zip(&v).map(|(x, y)| x * y).sum();
                assert_eq!(dot, int(0));
            }
        }
    }
}
