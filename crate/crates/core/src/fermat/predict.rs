//! Closed-form resolution data stated for the Fermat family.

use super::FermatContext;
use crate::error::{Error, Result};
use crate::hilbert::PredictedResolution;

/// Which stated resolution to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResolutionKind {
    /// `I^r`, `r >= 1`.
    Ordinary { r: u32 },
    /// `I(X_j)` for the given `k`, `1 <= j <= 3k`.
    SymbolicX { k: u32, j: u32 },
    /// `I(X_3')`, which is `I^(n-1)`.
    X3Prime,
}

fn binom2(a: u64) -> u64 {
    a * a.saturating_sub(1) / 2
}

impl FermatContext {
    pub fn predicted_resolution(&self, kind: ResolutionKind) -> Result<PredictedResolution> {
        let n = self.n;
        match kind {
            ResolutionKind::Ordinary { r: 0 } => Err(Error::Parameter("r must be at least 1".into())),
            ResolutionKind::Ordinary { r: 1 } => {
                let e = (n * n + 3) as u64;
                Ok(PredictedResolution::new(vec![vec![(n + 1, 3)], vec![(2 * n, 1), (n + 3, 1)]])
                    .with_multiplicity(e))
            }
            ResolutionKind::Ordinary { r } => {
                let d = r * (n + 1);
                let b = |a: u32| binom2(a as u64) as u32;
                let e = (n * n + 3) as u64 * binom2(r as u64 + 1);
                Ok(PredictedResolution::new(vec![
                    vec![(d, b(r + 2))],
                    vec![(d + n - 1, b(r + 1)), (d + 2, b(r + 1))],
                    vec![((r + 1) * (n + 1), b(r))],
                ])
                .with_multiplicity(e))
            }
            ResolutionKind::SymbolicX { k, j } => {
                self.require_plane_curves()?;
                if k == 0 || j == 0 || j > 3 * k {
                    return Err(Error::Parameter(format!("need 1 <= j <= 3k, got k = {k}, j = {j}")));
                }
                let (i, r) = ((j - 1) / 3, (j - 1) % 3 + 1);
                let t = k * (n - 3);
                let base = t + j;
                let mut gens = vec![(n * base, t + 1)];
                let mut syz = vec![(n * (base + 1), t)];
                for l in 1..=i {
                    gens.push((n * (base + l), 3 * n));
                    syz.push((n * (base + l) + 1, 3 * n));
                }
                gens.push((n * (base + i + 1), r * n));
                syz.push((n * (base + i + 1) + 1, r * n));
                let (n64, i64_) = (n as u64, i as u64);
                let low = binom2(i64_ * n64 + 1);
                let high = binom2((i64_ + 1) * n64 + 1);
                let e = n64 * n64 * binom2(base as u64 + 1)
                    + match r {
                        1 => 2 * low + high,
                        2 => low + 2 * high,
                        _ => 3 * high,
                    };
                Ok(PredictedResolution::new(vec![gens, syz]).with_multiplicity(e))
            }
            ResolutionKind::X3Prime => {
                if n < 4 {
                    return Err(Error::Parameter(format!("X3' needs n >= 4, got {n}")));
                }
                let e = (n as u64 * n as u64 + 3) * binom2(n as u64);
                Ok(PredictedResolution::new(vec![
                    vec![(n * n - n, n - 3), (n * n - 1, 3 * n)],
                    vec![(n * n, 4 * n - 4)],
                ])
                .with_multiplicity(e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert;

    #[test]
    fn ordinary_square() {
        let c = FermatContext::auto(3).unwrap();
        let p = c.predicted_resolution(ResolutionKind::Ordinary { r: 2 }).unwrap();
        assert_eq!(p.shifts(0), vec![8; 6]);
        assert_eq!(p.shifts(1), vec![10; 6]);
        assert_eq!(p.shifts(2), vec![12]);
        assert_eq!(p.regularity(), 10);
        assert_eq!(p.euler_characteristic(), 0);
        assert_eq!(p.numerator_multiplicity().unwrap(), p.multiplicity.unwrap());
        let sq = c.ordinary_power(2).unwrap();
        assert!(hilbert::numerator_consistent(&sq, &p).unwrap());
    }

    #[test]
    fn first_power_regularity() {
        let c = FermatContext::auto(3).unwrap();
        let p = c.predicted_resolution(ResolutionKind::Ordinary { r: 1 }).unwrap();
        assert_eq!(p.regularity(), 5);
        assert_eq!(hilbert::regularity(c.ideal(), None).unwrap(), 5);
    }

    #[test]
    fn symbolic_x3() {
        let c = FermatContext::auto(3).unwrap();
        let p = c.predicted_resolution(ResolutionKind::SymbolicX { k: 1, j: 3 }).unwrap();
        assert_eq!(p.shifts(0), [vec![9], vec![12; 9]].concat());
        assert_eq!(p.shifts(1), vec![13; 9]);
        assert_eq!(p.regularity(), 12);
        assert_eq!(p.multiplicity, Some(72));
        let c4 = FermatContext::auto(4).unwrap();
        let p4 = c4.predicted_resolution(ResolutionKind::SymbolicX { k: 1, j: 3 }).unwrap();
        assert_eq!(p4.multiplicity, Some(190));
    }

    #[test]
    fn closed_forms_agree_with_shifts() {
        for n in 3..=5 {
            let c = FermatContext::auto(n).unwrap();
            let mut kinds = vec![ResolutionKind::Ordinary { r: 1 }, ResolutionKind::Ordinary { r: 3 }];
            for k in 1..=2 {
                kinds.extend((1..=3 * k).map(|j| ResolutionKind::SymbolicX { k, j }));
            }
            if n >= 4 {
                kinds.push(ResolutionKind::X3Prime);
            }
            for kind in kinds {
                let p = c.predicted_resolution(kind).unwrap();
                assert_eq!(p.euler_characteristic(), 0, "{kind:?}");
                assert_eq!(p.numerator_multiplicity().unwrap(), p.multiplicity.unwrap(), "{kind:?}");
            }
        }
    }
}
