use crate::elements::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};

/// A partition of the points `0..degree` into nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    degree: usize,
    cells: Vec<ElementSet>,
}

impl Partition {
    pub fn new(degree: usize, cells: Vec<ElementSet>) -> Result<Self> {
        if degree > MAX_ORDER {
            return Err(Error::TooLarge { order: degree, limit: MAX_ORDER });
        }
        let mut seen = ElementSet::EMPTY;
        for c in &cells {
            if c.is_empty() {
                return Err(Error::Invalid("empty cell".into()));
            }
            if !c.is_disjoint(seen) {
                return Err(Error::Invalid("cells overlap".into()));
            }
            seen = seen | *c;
        }
        if seen != ElementSet::full(degree) {
            return Err(Error::Invalid("cells do not cover the point set".into()));
        }
        Ok(Partition { degree, cells })
    }

    /// Every point on its own.
    pub fn discrete(degree: usize) -> Self {
        Partition { degree, cells: (0..degree).map(ElementSet::singleton).collect() }
    }

    /// A single cell (no cells at all when `degree` is 0).
    pub fn unit(degree: usize) -> Self {
        let cells = if degree == 0 { vec![] } else { vec![ElementSet::full(degree)] };
        Partition { degree, cells }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cells(&self) -> &[ElementSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the cell containing `x`.
    pub fn cell_of(&self, x: usize) -> usize {
        self.cells.iter().position(|c| c.contains(x)).expect("point in range")
    }

    pub fn equal_sized(&self) -> bool {
        self.cells.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Cells sorted by smallest point, for comparisons.
    pub fn normalized(mut self) -> Self {
        self.cells.sort_by_key(|c| c.first());
        self
    }
}
