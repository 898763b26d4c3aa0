use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::rings::Coeff;

type ApplyFn<C> = dyn Fn(&MultiPoly<C>) -> Result<MultiPoly<C>> + Send + Sync;

/// A linear map on polynomials in `n` variables, held as a shareable closure.
#[derive(Clone)]
pub struct LinearOperator<C> {
    n: usize,
    name: String,
    apply: Arc<ApplyFn<C>>,
}

/// Selector for [`op_algebra`].
#[derive(Clone, Debug)]
pub enum OpAlgebra<C> {
    Add,
    Scale(C),
    Compose,
    Power(u32),
    Commutator,
}

/// Checked operator algebra; errors when the variable counts differ.
pub fn op_algebra<C: Coeff>(a: &LinearOperator<C>, b: &LinearOperator<C>, op: OpAlgebra<C>) -> Result<LinearOperator<C>> {
    match op {
        OpAlgebra::Scale(c) => return Ok(a.scale(c)),
        OpAlgebra::Power(m) => return Ok(a.power(m)),
        _ => {}
    }
    if a.n != b.n {
        return Err(Error::Domain(format!("operators act on {} and {} variables", a.n, b.n)));
    }
    Ok(match op {
        OpAlgebra::Add => a.plus(b),
        OpAlgebra::Compose => a.compose(b),
        OpAlgebra::Commutator => a.commutator(b),
        OpAlgebra::Scale(_) | OpAlgebra::Power(_) => unreachable!(),
    })
}

impl<C: Coeff> LinearOperator<C> {
    pub fn new(
        n: usize,
        name: impl Into<String>,
        apply: impl Fn(&MultiPoly<C>) -> Result<MultiPoly<C>> + Send + Sync + 'static,
    ) -> Self {
        LinearOperator { n, name: name.into(), apply: Arc::new(apply) }
    }

    pub fn identity(n: usize) -> Self {
        LinearOperator::new(n, "1", |f| Ok(f.clone()))
    }

    pub fn zero(n: usize) -> Self {
        LinearOperator::new(n, "0", move |f| Ok(MultiPoly::zero(f.n())))
    }

    /// Multiplication by a ring scalar.
    pub fn scalar(n: usize, c: C) -> Self {
        LinearOperator::new(n, format!("{c}"), move |f| Ok(f.scale(&c)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn apply(&self, f: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        if f.n() != self.n {
            return Err(Error::Domain(format!("{} acts on {} variables, input has {}", self.name, self.n, f.n())));
        }
        (self.apply)(f)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        LinearOperator::new(self.n, format!("{} + {}", self.name, other.name), move |f| Ok(a.apply(f)?.plus(&b.apply(f)?)))
    }

    pub fn minus(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        LinearOperator::new(self.n, format!("{} - ({})", self.name, other.name), move |f| {
            Ok(a.apply(f)?.minus(&b.apply(f)?))
        })
    }

    pub fn scale(&self, c: C) -> Self {
        let a = self.clone();
        let name = format!("({c})*({})", self.name);
        LinearOperator::new(self.n, name, move |f| Ok(a.apply(f)?.scale(&c)))
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        LinearOperator::new(self.n, format!("({})({})", self.name, other.name), move |f| a.apply(&b.apply(f)?))
    }

    pub fn power(&self, m: u32) -> Self {
        let a = self.clone();
        LinearOperator::new(self.n, format!("({})^{m}", self.name), move |f| {
            let mut g = f.clone();
            for _ in 0..m {
                g = a.apply(&g)?;
            }
            Ok(g)
        })
    }

    /// `self∘other - other∘self`.
    pub fn commutator(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        LinearOperator::new(self.n, format!("[{}, {}]", self.name, other.name), move |f| {
            Ok(a.apply(&b.apply(f)?)?.minus(&b.apply(&a.apply(f)?)?))
        })
    }

    /// Sum of a list of operators (zero operator when empty).
    pub fn sum(n: usize, ops: impl IntoIterator<Item = Self>) -> Self {
        let ops: Vec<Self> = ops.into_iter().collect();
        let name = if ops.is_empty() {
            "0".to_string()
        } else {
            ops.iter().map(|o| o.name.clone()).collect::<Vec<_>>().join(" + ")
        };
        LinearOperator::new(n, name, move |f| {
            let images = ops.iter().map(|o| o.apply(f)).collect::<Result<Vec<_>>>()?;
            Ok(MultiPoly::sum(f.n(), images.iter()))
        })
    }
}

impl<C> fmt::Debug for LinearOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOperator(n={}, {})", self.n, self.name)
    }
}
