//! Exact rational linear algebra, just enough for the consistency checks
//! and bound propagation used elsewhere: Gaussian elimination over Q.

use num::Zero;

use crate::cyclotomic::Rat;

/// Solve A x = b exactly. Returns one solution if the system is consistent
/// (free variables are set to zero), `None` if inconsistent. `rows` and
/// `rhs` must have equal length; rows may be redundant or overdetermined.
pub fn solve_rational_system(rows: &[Vec<Rat>], rhs: &[Rat], nvars: usize) -> Option<Vec<Rat>> {
    assert_eq!(rows.len(), rhs.len());
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), nvars);
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();

    let m = aug.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; nvars];
    let mut row = 0usize;
    for col in 0..nvars {
        let Some(p) = (row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let inv = aug[row][col].clone();
        for x in aug[row][col..].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=nvars {
                    let delta = &aug[row][c] * &f;
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == m {
            break;
        }
    }
    // inconsistent iff some zero row has nonzero rhs
    for r in row..m {
        if !aug[r][nvars].is_zero() && aug[r][..nvars].iter().all(Rat::is_zero) {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); nvars];
    for col in 0..nvars {
        if let Some(r) = pivot_of_col[col] {
            x[col] = aug[r][nvars].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::rat;

    #[test]
    fn solves_and_detects_inconsistency() {
        // x + y = 3, x - y = 1 => (2, 1)
        let rows = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let sol = solve_rational_system(&rows, &[rat(3), rat(1)], 2).unwrap();
        assert_eq!(sol, vec![rat(2), rat(1)]);
        // redundant row is fine
        let rows = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert!(solve_rational_system(&rows, &[rat(3), rat(6)], 2).is_some());
        // inconsistent
        assert!(solve_rational_system(&rows, &[rat(3), rat(7)], 2).is_none());
        // underdetermined: free variable filled with zero, still a solution
        let rows = vec![vec![rat(1), rat(2)]];
        let sol = solve_rational_system(&rows, &[rat(4)], 2).unwrap();
        assert_eq!(sol, vec![rat(4), rat(0)]);
    }
}
