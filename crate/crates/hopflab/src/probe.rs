use nalgebra::{Complex, DMatrix};
use num_rational::BigRational;

pub fn probe_eigen() -> Vec<f64> {
    let h = DMatrix::from_row_slice(
        2,
        2,
        &[
            Complex::new(2.0, 0.0),
            Complex::new(0.0, 1.0),
            Complex::new(0.0, -1.0),
            Complex::new(2.0, 0.0),
        ],
    );
    let eig = h.symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

pub fn probe_from_float() -> BigRational {
    BigRational::from_float(std::f64::consts::PI).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigen_hermitian() {
        let v = probe_eigen();
        assert!((v[0] - 1.0).abs() < 1e-12 && (v[1] - 3.0).abs() < 1e-12, "{v:?}");
    }

    #[test]
    fn from_float_pi() {
        let pi = probe_from_float();
        let back: f64 = num_traits::ToPrimitive::to_f64(&pi).unwrap();
        assert_eq!(back, std::f64::consts::PI);
    }
}
