//! Partition flag syntax: comma-separated parts with an optional
//! exponent shorthand, so `3,2,1` and `2^3,1^2` both work.

use anyhow::{bail, Result};

/// Expands a partition flag into its raw integer parts (validation of
/// positivity and ordering happens in the core constructor).
pub fn parse_partition(spec: &str) -> Result<Vec<i64>> {
    let mut parts = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            bail!("empty entry in partition {spec:?}");
        }
        match token.split_once('^') {
            Some((base, exp)) => {
                let base: i64 = base
                    .trim()
                    .parse()
                    .map_err(|_| anyhow::anyhow!("bad part {token:?} in partition {spec:?}"))?;
                let exp: usize = exp
                    .trim()
                    .parse()
                    .map_err(|_| anyhow::anyhow!("bad exponent {token:?} in partition {spec:?}"))?;
                if exp == 0 {
                    bail!("exponent must be positive in {token:?}");
                }
                parts.extend(std::iter::repeat_n(base, exp));
            }
            None => {
                let v: i64 = token
                    .parse()
                    .map_err(|_| anyhow::anyhow!("bad part {token:?} in partition {spec:?}"))?;
                parts.push(v);
            }
        }
    }
    Ok(parts)
}
