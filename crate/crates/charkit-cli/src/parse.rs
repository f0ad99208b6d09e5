//! Parsing of command-line weight and family syntax.

use charkit::lie::{Family, GroupId, HalfInt, HalfIntVector};
use num_bigint::BigInt;

pub fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| {
        format!("unknown group family {s:?} (expected gl, sp, so_even, so_odd or g2)")
    })
}

pub fn parse_families(list: &str) -> Result<Vec<Family>, String> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let fam = parse_family(part)?;
        if !out.contains(&fam) {
            out.push(fam);
        }
    }
    if out.is_empty() {
        return Err("families list is empty".into());
    }
    Ok(out)
}

/// One half-integer: an integer literal or `p/2`.
pub fn parse_half_int(s: &str) -> Result<HalfInt, String> {
    let s = s.trim();
    if let Some(num) = s.strip_suffix("/2") {
        let p: BigInt = num.parse().map_err(|_| format!("bad half-integer {s:?}"))?;
        Ok(HalfInt::from_doubled_bigint(p))
    } else {
        let v: BigInt = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
        Ok(HalfInt::from_bigint(v))
    }
}

pub fn parse_lambda(s: &str) -> Result<HalfIntVector, String> {
    let entries: Result<Vec<HalfInt>, String> = s.split(',').map(parse_half_int).collect();
    Ok(HalfIntVector::new(entries?))
}

/// Group plus rank, validating the lambda length against the rank.
pub fn parse_group(
    family: Family,
    rank: Option<usize>,
    lambda_len: usize,
) -> Result<GroupId, String> {
    let rank = match family {
        Family::G2 => 2,
        _ => rank.ok_or("--rank is required for classical families")?,
    };
    if rank < 1 {
        return Err("rank must be positive".into());
    }
    if lambda_len != rank {
        return Err(format!(
            "lambda has {lambda_len} entries but rank is {rank}"
        ));
    }
    Ok(GroupId::new(family, rank))
}

/// G2 `--k-l` argument: two nonnegative integers.
pub fn parse_kl(s: &str) -> Result<(u32, u32), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("expected k,l but got {s:?}"));
    }
    let k = parts[0]
        .parse()
        .map_err(|_| format!("bad k {:?}", parts[0]))?;
    let l = parts[1]
        .parse()
        .map_err(|_| format!("bad l {:?}", parts[1]))?;
    Ok((k, l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_halves() {
        let lam = parse_lambda("3,1,0").unwrap();
        assert_eq!(lam, HalfIntVector::from_ints(&[3, 1, 0]));
        let lam = parse_lambda("3/2,1/2").unwrap();
        assert_eq!(lam, HalfIntVector::from_doubled(&[3, 1]));
        let lam = parse_lambda("-1/2").unwrap();
        assert_eq!(lam, HalfIntVector::from_doubled(&[-1]));
        assert!(parse_lambda("1.5").is_err());
        assert!(parse_lambda("").is_err());
    }

    #[test]
    fn parses_family_lists() {
        assert_eq!(
            parse_families("gl,sp").unwrap(),
            vec![Family::Gl, Family::Sp]
        );
        assert_eq!(parse_families("so_odd").unwrap(), vec![Family::SoOdd]);
        assert!(parse_families("so3").is_err());
    }

    #[test]
    fn parses_kl() {
        assert_eq!(parse_kl("1,0").unwrap(), (1, 0));
        assert!(parse_kl("1").is_err());
        assert!(parse_kl("1,-2").is_err());
    }
}
