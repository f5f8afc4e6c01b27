use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Breadth-first closure of `gens` under right multiplication, starting from `identity`.
///
/// Returns elements in discovery order; fails once more than `cap` elements are found.
pub fn bfs_closure<T, F>(identity: T, gens: &[T], cap: u64, mut mul: F) -> Result<Vec<T>>
where
    T: Clone + Eq + Hash,
    F: FnMut(&T, &T) -> T,
{
    let mut seen: HashSet<T> = HashSet::from([identity.clone()]);
    let mut out = vec![identity.clone()];
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                if out.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        required: BigInt::from(cap) + 1,
                        cap,
                    });
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Fails with `CapExceeded` when `required > cap`.
pub fn ensure_cap(required: &BigInt, cap: u64) -> Result<()> {
    if *required > BigInt::from(cap) {
        Err(Error::CapExceeded {
            required: required.clone(),
            cap,
        })
    } else {
        Ok(())
    }
}
