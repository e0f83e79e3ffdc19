//! f64 helpers usable with and without `std`.

#[cfg(feature = "std")]
#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

// Irrational constants are always computed, never transcribed as decimals.
#[inline]
pub(crate) fn sqrt2() -> f64 {
    sqrt(2.0)
}

#[inline]
pub(crate) fn sqrt5() -> f64 {
    sqrt(5.0)
}
