//! Small dense complex linear algebra, Pauli and Dirac matrices, and the
//! double-cover maps SU(2) → SO(3) and SL(2,C) → SO(3,1).
//!
//! Everything here is immutable and pure.

mod gamma;
mod lorentz;
mod spinor;
mod su2;

pub use gamma::{dirac_bar, gamma, gamma5, Gamma};
pub use lorentz::{sl2c_to_lorentz, LorentzElement, SL2CElement};
pub use spinor::{DiracSpinor, Spinor2};
pub use su2::{su2_exp, su2_to_so3, SO3Element, SU2Element};

use nalgebra::{Matrix2, Vector3, Vector4};
pub use num_complex::Complex64 as C64;

pub const I: C64 = C64::new(0.0, 1.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

/// Minkowski metric diag(1, −1, −1, −1).
pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Pauli matrix σ^k for k = 1, 2, 3; k = 0 gives the identity.
pub fn pauli(k: usize) -> Matrix2<C64> {
    match k {
        0 => Matrix2::new(ONE, ZERO, ZERO, ONE),
        1 => Matrix2::new(ZERO, ONE, ONE, ZERO),
        2 => Matrix2::new(ZERO, -I, I, ZERO),
        3 => Matrix2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("pauli index {k} out of range"),
    }
}

/// σ^μ = (1, σ^i).
pub fn sigma(mu: usize) -> Matrix2<C64> {
    pauli(mu)
}

/// σ̃^μ = (1, −σ^i).
pub fn sigma_tilde(mu: usize) -> Matrix2<C64> {
    if mu == 0 {
        pauli(0)
    } else {
        -pauli(mu)
    }
}

/// σ·v for a real 3-vector.
pub fn sigma_dot(v: &Vector3<f64>) -> Matrix2<C64> {
    pauli(1) * C64::from(v.x) + pauli(2) * C64::from(v.y) + pauli(3) * C64::from(v.z)
}

/// Minkowski inner product a·b = a⁰b⁰ − a⃗·b⃗.
pub fn mdot(a: &Vector4<f64>, b: &Vector4<f64>) -> f64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

/// Lowers (or raises) the index of a 4-vector.
pub fn lower(a: &Vector4<f64>) -> Vector4<f64> {
    Vector4::new(a[0], -a[1], -a[2], -a[3])
}

/// Sign of the permutation (i, j, k, l) of (0, 1, 2, 3); 0 if any index repeats.
pub fn perm_sign4(idx: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// ε_{μνρσ} with lower indices, ε_{0123} = −1.
pub fn levi_civita_lower(idx: [usize; 4]) -> f64 {
    -perm_sign4(idx)
}

/// ε^{μνρσ} with upper indices, ε^{0123} = +1.
pub fn levi_civita_upper(idx: [usize; 4]) -> f64 {
    perm_sign4(idx)
}

/// Full contraction ε_{μνρσ} a^μ b^ν c^ρ d^σ of four contravariant vectors.
pub fn epsilon_contract(a: &Vector4<f64>, b: &Vector4<f64>, c: &Vector4<f64>, d: &Vector4<f64>) -> f64 {
    let mut acc = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if j == i {
                continue;
            }
            for k in 0..4 {
                if k == i || k == j {
                    continue;
                }
                let l = 6 - i - j - k;
                acc += levi_civita_lower([i, j, k, l]) * a[i] * b[j] * c[k] * d[l];
            }
        }
    }
    acc
}

/// Sign of the permutation of (0, 1, 2); ε_{012} = +1 for the planar (2+1) case.
pub fn levi_civita3(idx: [usize; 3]) -> f64 {
    let [a, b, c] = idx;
    if a == b || b == c || a == c {
        return 0.0;
    }
    let mut sign = 1.0;
    if a > b {
        sign = -sign;
    }
    if a > c {
        sign = -sign;
    }
    if b > c {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_conventions() {
        assert_eq!(levi_civita_lower([0, 1, 2, 3]), -1.0);
        assert_eq!(levi_civita_upper([0, 1, 2, 3]), 1.0);
        assert_eq!(levi_civita_lower([1, 0, 2, 3]), 1.0);
        assert_eq!(levi_civita_lower([0, 0, 2, 3]), 0.0);
        assert_eq!(levi_civita3([0, 1, 2]), 1.0);
        assert_eq!(levi_civita3([2, 1, 0]), -1.0);
        assert_eq!(levi_civita3([1, 2, 0]), 1.0);
    }

    #[test]
    fn epsilon_contract_matches_basis() {
        let e = |k: usize| {
            let mut v = Vector4::zeros();
            v[k] = 1.0;
            v
        };
        assert_eq!(epsilon_contract(&e(0), &e(1), &e(2), &e(3)), -1.0);
        assert_eq!(epsilon_contract(&e(1), &e(0), &e(2), &e(3)), 1.0);
    }

    #[test]
    fn pauli_algebra() {
        for i in 1..4 {
            for j in 1..4 {
                let anti = pauli(i) * pauli(j) + pauli(j) * pauli(i);
                let expect = if i == j { pauli(0) * C64::from(2.0) } else { Matrix2::zeros() };
                assert!((anti - expect).norm() < 1e-15);
            }
        }
    }
}
