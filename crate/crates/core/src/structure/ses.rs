use super::comodule::Comod;
use crate::error::{Error, Result};
use crate::linalg::{rank, Mat};
use crate::report::{CheckReport, CheckRow};

/// Short exact sequence `0 → M →i→ N →p→ O → 0` of comodules of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ses {
    pub m: Comod,
    pub n: Comod,
    pub o: Comod,
    pub i: Mat,
    pub p: Mat,
}

impl Ses {
    pub fn new(m: Comod, n: Comod, o: Comod, i: Mat, p: Mat) -> Result<Self> {
        if i.shape() != (n.dim(), m.dim()) || p.shape() != (o.dim(), n.dim()) {
            return Err(Error::MalformedInput(format!(
                "maps {}x{} and {}x{} do not fit dims {}, {}, {}",
                i.rows(),
                i.cols(),
                p.rows(),
                p.cols(),
                m.dim(),
                n.dim(),
                o.dim()
            )));
        }
        Ok(Ses { m, n, o, i, p })
    }

    /// Colinearity of both maps plus exactness at all three spots.
    pub fn validate(&self) -> CheckReport {
        let mut rep = CheckReport::new("short exact sequence");
        rep.push(CheckRow::flag("i colinear", self.m.is_morphism(&self.i, &self.n), ""));
        rep.push(CheckRow::flag("p colinear", self.n.is_morphism(&self.p, &self.o), ""));
        rep.push(CheckRow::compare("i injective", rank(&self.i), self.m.dim()));
        rep.push(CheckRow::compare("p surjective", rank(&self.p), self.o.dim()));
        rep.push(CheckRow::flag("p∘i = 0", (&self.p * &self.i).is_zero(), ""));
        rep.push(CheckRow::compare("middle exact", self.n.dim() - rank(&self.p), rank(&self.i)));
        rep
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.validate().failures().next() {
            Some(r) => Err(Error::MalformedInput(format!("sequence fails {}", r.label))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::fixtures;

    #[test]
    fn fixture_sequences_validate() {
        assert!(fixtures::socle_ses().validate().passed());
        assert!(fixtures::k1_ses().validate().passed());
    }

    #[test]
    fn swapped_maps_fail() {
        let mut s = fixtures::socle_ses();
        // 1 ↦ c1 is not colinear
        s.i = crate::Mat::from_i64(s.i.field(), &[&[0], &[1]]);
        let rep = s.validate();
        assert!(!rep.row("i colinear").unwrap().passed);
        assert!(!rep.row("p∘i = 0").unwrap().passed);
    }
}
