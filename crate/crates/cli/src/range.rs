//! Inclusive integer ranges written `lo..hi` or as a single integer.

use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad bound {t:?}: {e}"));
        // a leading minus belongs to the lower bound, so split on the first ".." after it
        let split = s.get(1..).and_then(|rest| rest.find("..")).map(|i| i + 1);
        let r = match split {
            Some(i) => IntRange { lo: parse(&s[..i])?, hi: parse(&s[i + 2..])? },
            None => {
                let v = parse(s)?;
                IntRange { lo: v, hi: v }
            }
        };
        if r.hi < r.lo {
            return Err(format!("empty range {s}"));
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges() {
        assert_eq!("1..50".parse::<IntRange>().unwrap(), IntRange { lo: 1, hi: 50 });
        assert_eq!("-5..-2".parse::<IntRange>().unwrap(), IntRange { lo: -5, hi: -2 });
        assert_eq!("-3..4".parse::<IntRange>().unwrap(), IntRange { lo: -3, hi: 4 });
        assert_eq!("8".parse::<IntRange>().unwrap(), IntRange { lo: 8, hi: 8 });
        assert_eq!("0..0".parse::<IntRange>().unwrap().iter().count(), 1);
        assert!("5..1".parse::<IntRange>().is_err());
        assert!("x..1".parse::<IntRange>().is_err());
    }
}
