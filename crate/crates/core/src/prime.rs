use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A rational prime, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// 1 if p divides k, 0 otherwise. Zero is divisible by every prime.
    pub fn epsilon(self, k: i64) -> u64 {
        u64::from(k.rem_euclid(self.0 as i64) == 0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(9).is_err());
        assert_eq!(Prime::new(0), Err(Error::NotPrime(0)));
        assert!(Prime::new(7919).is_ok());
    }

    #[test]
    fn epsilon_values() {
        let p3 = Prime::new(3).unwrap();
        let p5 = Prime::new(5).unwrap();
        let p2 = Prime::new(2).unwrap();
        assert_eq!(p3.epsilon(21), 1);
        assert_eq!(p5.epsilon(21), 0);
        assert_eq!(p2.epsilon(0), 1);
        assert_eq!(p3.epsilon(-6), 1);
        assert_eq!(p3.epsilon(-7), 0);
    }
}
