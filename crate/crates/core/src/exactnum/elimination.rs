use super::{GoldenNumber, Vector4};

/// Row rank of a set of 4-vectors and a basis of their common orthogonal
/// complement (the right null space of the row matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub kernel_basis: Vec<Vector4>,
}

/// Exact rank and null space by fraction-free (Bareiss) elimination.
pub fn rank_and_kernel(rows: &[Vector4]) -> RankKernel {
    let mut m: Vec<[GoldenNumber; 4]> = rows.iter().map(|r| r.0.clone()).collect();
    let mut prev = GoldenNumber::one();
    let mut pivots: Vec<usize> = Vec::with_capacity(4);

    for col in 0..4 {
        let r = pivots.len();
        let Some(found) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let pivot = m[r][col].clone();
        for i in r + 1..m.len() {
            let lead = m[i][col].clone();
            for j in col + 1..4 {
                let t = &(&pivot * &m[i][j]) - &(&lead * &m[r][j]);
                m[i][j] = &t / &prev;
            }
            m[i][col] = GoldenNumber::zero();
        }
        prev = pivot;
        pivots.push(col);
    }

    let rank = pivots.len();
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    let kernel_basis = free
        .iter()
        .map(|&f| {
            let mut x: [GoldenNumber; 4] = std::array::from_fn(|_| GoldenNumber::zero());
            x[f] = GoldenNumber::one();
            for (k, &pc) in pivots.iter().enumerate().rev() {
                let s: GoldenNumber = (pc + 1..4).map(|j| &m[k][j] * &x[j]).sum();
                x[pc] = -(&s / &m[k][pc]);
            }
            Vector4(x)
        })
        .collect();

    RankKernel { rank, kernel_basis }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_axes() {
        let rk = rank_and_kernel(&[
            Vector4::from_integers([1, 0, 0, 0]),
            Vector4::from_integers([0, 1, 0, 0]),
        ]);
        assert_eq!(rk.rank, 2);
        assert_eq!(
            rk.kernel_basis,
            vec![
                Vector4::from_integers([0, 0, 1, 0]),
                Vector4::from_integers([0, 0, 0, 1])
            ]
        );
    }

    #[test]
    fn scalar_multiple() {
        let rk = rank_and_kernel(&[
            Vector4::from_integers([1, 1, 0, 0]),
            Vector4::from_integers([2, 2, 0, 0]),
        ]);
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel_basis.len(), 3);
    }

    #[test]
    fn kernel_is_orthogonal_to_rows_with_surds() {
        let phi = GoldenNumber::phi();
        let rows = vec![
            Vector4::new(phi.clone(), GoldenNumber::one(), GoldenNumber::zero(), GoldenNumber::sqrt5()),
            Vector4::new(GoldenNumber::zero(), phi.clone(), GoldenNumber::from_integer(-2), GoldenNumber::one()),
            Vector4::new(GoldenNumber::one(), GoldenNumber::zero(), phi, GoldenNumber::phi_inv()),
        ];
        let rk = rank_and_kernel(&rows);
        assert_eq!(rk.rank, 3);
        assert_eq!(rk.kernel_basis.len(), 1);
        for k in &rk.kernel_basis {
            assert!(!k.is_zero());
            for r in &rows {
                assert!(k.dot(r).is_zero());
            }
        }
    }

    #[test]
    fn empty_and_zero_rows() {
        assert_eq!(rank_and_kernel(&[]).rank, 0);
        let rk = rank_and_kernel(&[Vector4::zero()]);
        assert_eq!(rk.rank, 0);
        assert_eq!(rk.kernel_basis.len(), 4);
    }
}
