use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest cell count per dimension accepted by the dense elimination.
pub const RANK_LIMIT: usize = 20_000;

/// Rank over GF(2) of the matrix whose columns are the facet lists (with
/// multiplicity reduced mod 2) over `rows` rows.
pub(crate) fn rank(rows: usize, columns: &[Vec<usize>]) -> Result<usize> {
    for size in [rows, columns.len()] {
        if size > RANK_LIMIT {
            return Err(Error::TooLarge {
                what: "boundary matrix dimension".into(),
                size,
                limit: RANK_LIMIT,
            });
        }
    }
    let words = rows.div_ceil(64);
    // pivot row -> reduced column with that lowest set row
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut bits = vec![0u64; words];
        for &r in col {
            bits[r / 64] ^= 1 << (r % 64);
        }
        while let Some(low) = lowest(&bits) {
            match pivots.get(&low) {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots.insert(low, bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Ok(rank)
}

fn lowest(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}
