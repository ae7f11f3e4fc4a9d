//! The `planar_code` interchange format used by plantri-style generators.
//!
//! Optional header `>>planar_code<<`, then per graph: one byte `n`, then for
//! each vertex `1..=n` its neighbors (1-based, clockwise) terminated by 0.
//! Only the one-byte variant is supported.

use thiserror::Error;

use super::{MapError, PlanarMap};

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Error)]
pub enum PlanarCodeError {
    #[error("malformed header")]
    MalformedHeader,
    #[error("record {record} is truncated")]
    TruncatedRecord { record: usize },
    #[error("vertex count out of range for the one-byte format (record {record})")]
    VertexOverflow { record: usize },
    #[error("record {record} is not a valid cubic sphere map: {source}")]
    InvalidMap { record: usize, source: MapError },
}

pub fn encode_planar_code(maps: &[PlanarMap]) -> Result<Vec<u8>, PlanarCodeError> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for (record, m) in maps.iter().enumerate() {
        let n = m.num_vertices();
        if n == 0 || n > 255 {
            return Err(PlanarCodeError::VertexOverflow { record });
        }
        out.push(n as u8);
        for v in 0..n {
            // stored rotation is counterclockwise; the format is clockwise
            for &w in m.neighbors(v).iter().rev() {
                out.push((w + 1) as u8);
            }
            out.push(0);
        }
    }
    Ok(out)
}

pub fn decode_planar_code(bytes: &[u8]) -> Result<Vec<PlanarMap>, PlanarCodeError> {
    let mut pos = 0;
    if bytes.starts_with(b">>") {
        let end = bytes
            .windows(2)
            .position(|w| w == b"<<")
            .ok_or(PlanarCodeError::MalformedHeader)?;
        let header = &bytes[..end + 2];
        if !header.starts_with(b">>planar_code") {
            return Err(PlanarCodeError::MalformedHeader);
        }
        let tail = &header[b">>planar_code".len()..header.len() - 2];
        // the one-byte format has no endianness tag; "le"/"be" tags are tolerated
        if !matches!(tail, b"" | b" le" | b" be") {
            return Err(PlanarCodeError::MalformedHeader);
        }
        pos = end + 2;
    }
    let mut maps = Vec::new();
    while pos < bytes.len() {
        let record = maps.len();
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(PlanarCodeError::VertexOverflow { record });
        }
        let mut lists = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let b = *bytes
                    .get(pos)
                    .ok_or(PlanarCodeError::TruncatedRecord { record })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                list.push(b as usize - 1);
            }
            list.reverse();
            lists.push(list);
        }
        let map = PlanarMap::from_rotation(&lists)
            .map_err(|source| PlanarCodeError::InvalidMap { record, source })?;
        maps.push(map);
    }
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_is_empty() {
        assert!(decode_planar_code(PLANAR_CODE_HEADER).unwrap().is_empty());
        assert!(decode_planar_code(b"").unwrap().is_empty());
    }

    #[test]
    fn bad_header() {
        assert!(matches!(
            decode_planar_code(b">>graph6<<"),
            Err(PlanarCodeError::MalformedHeader)
        ));
        assert!(matches!(
            decode_planar_code(b">>planar_code"),
            Err(PlanarCodeError::MalformedHeader)
        ));
    }

    #[test]
    fn truncated_and_escape() {
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.extend_from_slice(&[4, 2, 3, 4, 0, 1]);
        assert!(matches!(
            decode_planar_code(&bytes),
            Err(PlanarCodeError::TruncatedRecord { record: 0 })
        ));
        let mut bytes = PLANAR_CODE_HEADER.to_vec();
        bytes.push(0);
        assert!(matches!(
            decode_planar_code(&bytes),
            Err(PlanarCodeError::VertexOverflow { record: 0 })
        ));
    }

    #[test]
    fn tetrahedron_bytes() {
        let k4 =
            PlanarMap::from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
                .unwrap();
        let bytes = encode_planar_code(std::slice::from_ref(&k4)).unwrap();
        assert_eq!(
            &bytes[PLANAR_CODE_HEADER.len()..],
            &[4, 4, 3, 2, 0, 3, 4, 1, 0, 4, 2, 1, 0, 2, 3, 1, 0]
        );
        let back = decode_planar_code(&bytes).unwrap();
        assert_eq!(back, vec![k4]);
    }
}
