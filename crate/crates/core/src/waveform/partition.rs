use crate::discretization::Grid1D;
use crate::error::{Error, Result};

/// Non-overlapping split of a global grid into subdomains that meet at grid
/// nodes.
#[derive(Debug, Clone)]
pub struct Partition {
    grid: Grid1D,
    boundaries: Vec<f64>,
    nodes: Vec<usize>,
    grids: Vec<Grid1D>,
}

impl Partition {
    /// `boundaries` runs `x_min = x_0 < x_1 < ... < x_N = x_max`.
    pub fn new(grid: &Grid1D, boundaries: &[f64]) -> Result<Self> {
        if boundaries.len() < 3 {
            return Err(Error::InvalidPartition(format!(
                "need at least two subdomains, got {} boundaries",
                boundaries.len()
            )));
        }
        let first = boundaries[0];
        let last = boundaries[boundaries.len() - 1];
        let tol = 1e-9 * grid.dx();
        if (first - grid.x_min()).abs() > tol || (last - grid.x_max()).abs() > tol {
            return Err(Error::InvalidPartition(format!(
                "boundaries must start at {} and end at {}",
                grid.x_min(),
                grid.x_max()
            )));
        }
        let nodes = boundaries
            .iter()
            .map(|&x| grid.node_at(x).ok_or(Error::NonConforming { x }))
            .collect::<Result<Vec<_>>>()?;
        if nodes.windows(2).any(|w| w[1] < w[0] + 2) {
            return Err(Error::InvalidPartition(
                "boundaries must increase with at least three nodes per subdomain".into(),
            ));
        }
        let grids = nodes
            .windows(2)
            .map(|w| grid.subgrid(w[0], w[1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            grid: grid.clone(),
            boundaries: boundaries.to_vec(),
            nodes,
            grids,
        })
    }

    /// `count` subdomains of equal width.
    pub fn equal(grid: &Grid1D, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidPartition(format!("need at least two subdomains, got {count}")));
        }
        let width = (grid.x_max() - grid.x_min()) / count as f64;
        let boundaries: Vec<f64> = (0..=count)
            .map(|i| match i {
                0 => grid.x_min(),
                i if i == count => grid.x_max(),
                i => grid.x_min() + i as f64 * width,
            })
            .collect();
        Self::new(grid, &boundaries)
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    pub fn subdomains(&self) -> usize {
        self.grids.len()
    }

    pub fn interfaces(&self) -> usize {
        self.grids.len() - 1
    }

    pub fn subgrid(&self, i: usize) -> &Grid1D {
        &self.grids[i]
    }

    /// Global node index of interface `j` (between subdomains `j` and `j + 1`).
    pub fn interface_node(&self, j: usize) -> usize {
        self.nodes[j + 1]
    }
}
