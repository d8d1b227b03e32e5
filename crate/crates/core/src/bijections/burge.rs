use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::tableau::Tableau;

use super::rsk;

/// Burge correspondence `φ̃`, from RSK on the row and column flips of `V`.
pub fn burge(v: &IntMatrix) -> Result<(Tableau, Tableau)> {
    let (b, _) = rsk(&v.flip_rows())?;
    let (_, a) = rsk(&v.flip_cols())?;
    Ok((b, a))
}
