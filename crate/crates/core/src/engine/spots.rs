//! Bounded archive of the best evaluated solutions.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::engine::params::SpotSelection;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spot {
    pub x: Vec<f64>,
    pub value: f64,
    /// Arrival order, used to break value ties.
    pub seq: u64,
}

impl Spot {
    fn key(&self) -> (f64, u64) {
        (self.value, self.seq)
    }
}

fn key_cmp(a: &Spot, b: &Spot) -> std::cmp::Ordering {
    a.key().partial_cmp(&b.key()).expect("spot values are never NaN")
}

/// At most `capacity` entries; always the `capacity` lowest values offered so
/// far, earlier arrivals winning ties.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VisibleSpotList {
    capacity: usize,
    entries: Vec<Spot>,
    offered: u64,
}

impl VisibleSpotList {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::InvalidParameter("visible-spot capacity must be at least 1".into()));
        }
        Ok(Self {
            capacity,
            entries: Vec::with_capacity(capacity),
            offered: 0,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() == self.capacity
    }

    pub fn entries(&self) -> &[Spot] {
        &self.entries
    }

    /// Offer a candidate. Non-finite values are stored as `+∞`. Returns whether
    /// it was accepted.
    pub fn offer(&mut self, x: &[f64], value: f64) -> bool {
        let value = if value.is_finite() { value } else { f64::INFINITY };
        let seq = self.offered;
        self.offered += 1;
        let spot = Spot {
            x: x.to_vec(),
            value,
            seq,
        };
        if self.entries.len() < self.capacity {
            self.entries.push(spot);
            return true;
        }
        let worst = self.worst_index().expect("full list is non-empty");
        if value < self.entries[worst].value {
            self.entries[worst] = spot;
            true
        } else {
            false
        }
    }

    fn worst_index(&self) -> Option<usize> {
        (0..self.entries.len()).max_by(|&a, &b| key_cmp(&self.entries[a], &self.entries[b]))
    }

    pub fn best(&self) -> Option<&Spot> {
        self.entries.iter().min_by(|a, b| key_cmp(a, b))
    }

    pub fn worst(&self) -> Option<&Spot> {
        self.worst_index().map(|i| &self.entries[i])
    }

    /// Entries ordered best first.
    pub fn sorted(&self) -> Vec<&Spot> {
        let mut v: Vec<&Spot> = self.entries.iter().collect();
        v.sort_by(|a, b| key_cmp(a, b));
        v
    }

    pub fn select<R: Rng + ?Sized>(&self, selection: SpotSelection, rng: &mut R) -> Result<&Spot> {
        if self.entries.is_empty() {
            return Err(Error::NoSpot);
        }
        let index = match selection {
            SpotSelection::Uniform => rng.random_range(0..self.entries.len()),
            SpotSelection::Roulette => self.roulette_index(rng),
        };
        Ok(&self.entries[index])
    }

    fn roulette_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let finite: Vec<usize> = (0..self.entries.len())
            .filter(|&i| self.entries[i].value.is_finite())
            .collect();
        if finite.is_empty() {
            return rng.random_range(0..self.entries.len());
        }
        let f_max = finite
            .iter()
            .map(|&i| self.entries[i].value)
            .fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = finite.iter().map(|&i| f_max - self.entries[i].value).collect();
        let total: f64 = weights.iter().sum();
        if !(total > 0.0 && total.is_finite()) {
            return finite[rng.random_range(0..finite.len())];
        }
        let mut u = rng.random::<f64>() * total;
        for (k, w) in weights.iter().enumerate() {
            if u < *w {
                return finite[k];
            }
            u -= w;
        }
        // Rounding can leave a sliver past the last positive weight.
        let last = weights.iter().rposition(|&w| w > 0.0).unwrap_or(0);
        finite[last]
    }
}
