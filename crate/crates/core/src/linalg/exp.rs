use super::Mat;
use crate::exactnum::Field;
use crate::{Error, Result};

/// `exp(m) = Σ m^j / j!` for nilpotent `m`, summed until the powers vanish.
pub fn exp_nilpotent<F: Field>(m: &Mat<F>) -> Result<Mat<F>> {
    if !m.is_square() {
        return Err(Error::SizeMismatch("exponential of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut sum = Mat::identity(n);
    let mut term = Mat::identity(n);
    for j in 1..=n {
        term = term.mul(m).scale(&F::from_int(1).div(&F::from_int(j as i64)));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.add(&term);
    }
    if term.mul(m).is_zero() {
        Ok(sum)
    } else {
        Err(Error::NotNilpotent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(exp_nilpotent(&Mat::<Rat>::zeros(3, 3)).unwrap(), Mat::identity(3));
        let e12 = Mat::<Rat>::unit(2, 0, 1);
        assert_eq!(exp_nilpotent(&e12).unwrap(), Mat::identity(2).add(&e12));
        assert!(matches!(
            exp_nilpotent(&Mat::<Rat>::identity(2)),
            Err(Error::NotNilpotent)
        ));
    }

    proptest! {
        #[test]
        fn exp_inverse(n in 1usize..6, entries in proptest::collection::vec(-3i64..4, 25)) {
            // strictly upper triangular
            let mut m = Mat::<Rat>::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    m.set(i, j, crate::exactnum::rat(entries[i * 5 + j]));
                }
            }
            // conjugate by a unipotent lower-triangular matrix to leave the triangle
            let mut p = Mat::<Rat>::identity(n);
            for (i, &e) in entries.iter().enumerate().take(n).skip(1) {
                p.set(i, i - 1, crate::exactnum::rat(e));
            }
            let m = p.mul(&m).mul(&p.inverse().unwrap());
            let a = exp_nilpotent(&m).unwrap();
            let b = exp_nilpotent(&m.neg()).unwrap();
            prop_assert_eq!(a.mul(&b), Mat::identity(n));
        }
    }
}
