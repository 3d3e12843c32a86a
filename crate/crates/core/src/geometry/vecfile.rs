//! Vector blocks (little-endian):
//!
//! ```text
//! "VKVEC1" | u8 kind | u8 n | u64 count
//! count x ( n x i64 numerator | u64 denominator )
//! ```

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::indices::{IndexKind, PowerVector};

pub const VECTOR_MAGIC: &[u8; 6] = b"VKVEC1";

pub fn write_vectors<'a, W, I>(mut w: W, kind: IndexKind, n: usize, vectors: I) -> Result<()>
where
    W: Write,
    I: ExactSizeIterator<Item = &'a PowerVector>,
{
    w.write_all(VECTOR_MAGIC)?;
    w.write_all(&[
        kind.code(),
        u8::try_from(n).map_err(|_| Error::Overflow("voter count"))?,
    ])?;
    w.write_all(&(vectors.len() as u64).to_le_bytes())?;
    for v in vectors {
        if v.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.n(),
            });
        }
        if v.kind() != kind {
            return Err(Error::KindMismatch);
        }
        for &x in v.numerators() {
            let x = i64::try_from(x).map_err(|_| Error::Overflow("vector numerator"))?;
            w.write_all(&x.to_le_bytes())?;
        }
        let d =
            u64::try_from(v.denominator()).map_err(|_| Error::Overflow("vector denominator"))?;
        w.write_all(&d.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

fn read_exact<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<()> {
    r.read_exact(buf).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => Error::CorruptCache("truncated vector block".into()),
        _ => e.into(),
    })
}

pub fn read_vectors<R: Read>(mut r: R) -> Result<(IndexKind, usize, Vec<PowerVector>)> {
    let mut head = [0u8; 16];
    read_exact(&mut r, &mut head)?;
    if &head[..6] != VECTOR_MAGIC {
        return Err(Error::CorruptCache("bad vector block magic".into()));
    }
    let kind = IndexKind::from_code(head[6])
        .ok_or_else(|| Error::CorruptCache("unknown index kind".into()))?;
    let n = head[7] as usize;
    let count = u64::from_le_bytes(head[8..16].try_into().unwrap());
    let mut out = Vec::with_capacity(count.min(1 << 22) as usize);
    let mut word = [0u8; 8];
    for _ in 0..count {
        let mut nums = Vec::with_capacity(n);
        for _ in 0..n {
            read_exact(&mut r, &mut word)?;
            let x = i64::from_le_bytes(word);
            nums.push(
                u128::try_from(x).map_err(|_| Error::CorruptCache("negative numerator".into()))?,
            );
        }
        read_exact(&mut r, &mut word)?;
        let den = u64::from_le_bytes(word) as u128;
        let v = PowerVector::from_parts(kind, nums, den)
            .map_err(|e| Error::CorruptCache(e.to_string()))?;
        if !v.is_normalized() {
            return Err(Error::CorruptCache("vector does not sum to one".into()));
        }
        out.push(v);
    }
    if r.read(&mut word)? != 0 {
        return Err(Error::CorruptCache(
            "trailing data after vector block".into(),
        ));
    }
    Ok((kind, n, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let vs = vec![
            PowerVector::from_parts(IndexKind::Ssi, vec![14, 6, 2, 2], 24).unwrap(),
            PowerVector::from_parts(IndexKind::Ssi, vec![6, 6, 6, 6], 24).unwrap(),
        ];
        let mut buf = Vec::new();
        write_vectors(&mut buf, IndexKind::Ssi, 4, vs.iter()).unwrap();
        assert_eq!(buf.len(), 16 + 2 * 5 * 8);
        let (kind, n, back) = read_vectors(&buf[..]).unwrap();
        assert_eq!((kind, n), (IndexKind::Ssi, 4));
        assert_eq!(back, vs);
        assert!(matches!(
            read_vectors(&buf[..buf.len() - 3]),
            Err(Error::CorruptCache(_))
        ));
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(matches!(
            read_vectors(&bad[..]),
            Err(Error::CorruptCache(_))
        ));
    }
}
