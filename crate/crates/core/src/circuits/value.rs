use std::fmt;

use crate::bijections::PlaneFunction;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::Partition;
use crate::size;
use crate::tableau::Tableau;

/// Anything that flows along a circuit wire.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Tableau(Tableau),
    Matrix(IntMatrix),
    Plane(PlaneFunction),
    Partition(Partition),
    Tuple(Vec<Value>),
}

impl Value {
    pub fn pair(a: Value, b: Value) -> Value {
        Value::Tuple(vec![a, b])
    }

    pub fn tableaux(a: Tableau, b: Tableau) -> Value {
        Value::pair(Value::Tableau(a), Value::Tableau(b))
    }

    pub fn as_tableau(&self) -> Result<&Tableau> {
        match self {
            Value::Tableau(t) => Ok(t),
            _ => Err(Error::WrongValue("tableau")),
        }
    }

    pub fn as_matrix(&self) -> Result<&IntMatrix> {
        match self {
            Value::Matrix(m) => Ok(m),
            _ => Err(Error::WrongValue("matrix")),
        }
    }

    pub fn as_plane(&self) -> Result<&PlaneFunction> {
        match self {
            Value::Plane(f) => Ok(f),
            _ => Err(Error::WrongValue("plane function")),
        }
    }

    pub fn as_partition(&self) -> Result<&Partition> {
        match self {
            Value::Partition(p) => Ok(p),
            _ => Err(Error::WrongValue("partition")),
        }
    }

    pub fn as_tuple(&self, n: usize) -> Result<&[Value]> {
        match self {
            Value::Tuple(v) if v.len() == n => Ok(v),
            _ => Err(Error::WrongValue("tuple")),
        }
    }

    pub fn as_pair(&self) -> Result<(&Value, &Value)> {
        let v = self.as_tuple(2)?;
        Ok((&v[0], &v[1]))
    }

    pub fn as_tableau_pair(&self) -> Result<(&Tableau, &Tableau)> {
        let (a, b) = self.as_pair()?;
        Ok((a.as_tableau()?, b.as_tableau()?))
    }

    /// Bit size of the encoding; tuples add their parts.
    pub fn bits(&self) -> u64 {
        match self {
            Value::Tableau(t) => size::tableau_bits(t),
            Value::Matrix(m) => size::matrix_bits(m),
            Value::Plane(f) => size::plane_bits(f),
            Value::Partition(p) => size::array_bits(p.parts()),
            Value::Tuple(v) => v.iter().map(Value::bits).sum(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Tableau(t) => write!(f, "{t}"),
            Value::Matrix(m) => write!(f, "{m}"),
            Value::Plane(p) => write!(f, "{p}"),
            Value::Partition(p) => write!(f, "{p}"),
            Value::Tuple(v) => {
                f.write_str("(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl From<Tableau> for Value {
    fn from(t: Tableau) -> Self {
        Value::Tableau(t)
    }
}

impl From<IntMatrix> for Value {
    fn from(m: IntMatrix) -> Self {
        Value::Matrix(m)
    }
}

impl From<PlaneFunction> for Value {
    fn from(f: PlaneFunction) -> Self {
        Value::Plane(f)
    }
}
