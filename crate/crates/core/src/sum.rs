//! Compensated (error-free-transform) accumulation.
//!
//! Neumaier's variant of Kahan summation: the running compensation also
//! captures the case where the incoming term is larger than the partial sum,
//! which happens routinely in alternating series whose intermediate terms
//! dwarf the limit.

#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Compensated value of everything added so far.
    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of a slice.
pub fn neumaier_sum(xs: &[f64]) -> f64 {
    let mut acc = Accumulator::new();
    for &x in xs {
        acc.add(x);
    }
    acc.value()
}
