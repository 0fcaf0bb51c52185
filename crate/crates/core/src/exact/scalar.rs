use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{NumAssignRef, NumRef, One, Signed, ToPrimitive};

/// An exact ordered field.
///
/// The `Ord` bound keeps IEEE floats out: every comparison made by the hull
/// and feasibility code must be a true decision, not a rounded one.
pub trait Scalar: Clone + Ord + Debug + Signed + NumRef + NumAssignRef + Send + Sync {
    fn from_int(value: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_int(&BigInt::from(value))
    }

    /// Numerator and positive denominator in lowest terms.
    fn to_fraction(&self) -> (BigInt, BigInt);

    /// `Some` when the value is an integer.
    fn to_int(&self) -> Option<BigInt> {
        let (n, d) = self.to_fraction();
        d.is_one().then_some(n)
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_int(value: &BigInt) -> Self {
        Ratio::from_integer(value.clone())
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

macro_rules! machine_ratio {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            fn from_int(value: &BigInt) -> Self {
                let v = value
                    .to_i128()
                    .and_then(|v| <$int>::try_from(v).ok())
                    .expect("integer does not fit the machine rational");
                Ratio::from_integer(v)
            }

            fn to_fraction(&self) -> (BigInt, BigInt) {
                (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }
    )*};
}

machine_ratio!(i64, i128);
