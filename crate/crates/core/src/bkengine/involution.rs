use super::rewrite::Strategy;
use super::table::Table12;
use crate::error::{Error, Result};
use crate::tableaux::Filling;

impl Table12 {
    /// The involution on 12-rpps: flip, then resolve all descents.
    pub fn bk(&self) -> Result<Table12> {
        if !self.is_rpp() {
            return Err(Error::NotAnRpp);
        }
        self.flip().normalize(Strategy::SmallestFirst)
    }
}

fn ensure_rpp(t: &Filling) -> Result<()> {
    match t.is_rpp() {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::NotAnRpp),
        Err(e) => Err(e),
    }
}

/// The involution on rpps with entries in `{1,2}`.
pub fn bk12(t: &Filling) -> Result<Filling> {
    ensure_rpp(t)?;
    let table = Table12::from_filling(t).map_err(|_| Error::NotAnRpp)?;
    Ok(table.bk()?.to_filling())
}

/// The Bender-Knuth involution `B_i` on rpps: acts on the cells holding `i`
/// or `i+1` and leaves all other entries in place.
pub fn bk_general(t: &Filling, i: u32) -> Result<Filling> {
    assert!(i >= 1, "i is 1-based");
    ensure_rpp(t)?;
    let part = t.restrict(|v| v == i || v == i + 1).map_values(|v| v + 1 - i);
    if part.is_empty() {
        return Ok(t.clone());
    }
    let image = Table12::from_filling(&part)?.bk()?.to_filling();
    let mut out = t.clone();
    out.overlay(&image.map_values(|v| v + i - 1));
    Ok(out)
}
