//! Canonical byte encoding, hashing, and simulated signatures.
//!
//! Hashes must be bit-exact across platforms and implementations, so every
//! hashed structure is serialized as a field concatenation in declaration
//! order with these rules:
//!
//! | value                    | encoding                                        |
//! |--------------------------|-------------------------------------------------|
//! | unsigned integer         | 8 bytes, big-endian                             |
//! | UTF-8 string / byte blob | u64 big-endian length, then the raw bytes       |
//! | 32-byte digest           | 32 raw bytes, no length prefix                  |
//! | transaction kind         | 1 tag byte (declaration order, `Transfer` = 0)  |
//! | list                     | u64 big-endian count, then each element         |
//!
//! Concretely:
//!
//! * transaction bytes = `id ‖ kind ‖ from ‖ to ‖ amount ‖ payload`
//! * block pre-signature bytes = `slot ‖ leader ‖ prev_hash ‖ transactions`
//! * signature = SHA-256(`secret_key(leader)` ‖ pre-signature bytes)
//! * block hash = SHA-256(pre-signature bytes ‖ signature)
//! * `secret_key(id)` = SHA-256(`"blockroam/secret/"` ‖ id bytes)
//!
//! Signatures are simulated: a secret key is derived from the account id, so
//! they are unforgeable only relative to the simulator's own actors. That is
//! all the security arguments here need, and it keeps runs deterministic.

use sha2::{Digest as _, Sha256};

use super::{AccountId, Block, Digest, Transaction};

const SECRET_DOMAIN: &[u8] = b"blockroam/secret/";

pub(crate) struct Encoder {
    buf: Vec<u8>,
}

impl Encoder {
    pub fn new() -> Self {
        Encoder { buf: Vec::new() }
    }

    pub fn put_u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_be_bytes());
    }

    pub fn put_bytes(&mut self, b: &[u8]) {
        self.put_u64(b.len() as u64);
        self.buf.extend_from_slice(b);
    }

    pub fn put_str(&mut self, s: &str) {
        self.put_bytes(s.as_bytes());
    }

    pub fn put_digest(&mut self, d: &Digest) {
        self.buf.extend_from_slice(d.as_bytes());
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

pub(crate) fn sha256(bytes: &[u8]) -> Digest {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    Digest(hasher.finalize().into())
}

fn sha256_pair(a: &[u8], b: &[u8]) -> Digest {
    let mut hasher = Sha256::new();
    hasher.update(a);
    hasher.update(b);
    Digest(hasher.finalize().into())
}

/// Deterministic per-account secret key.
pub fn secret_key(account: &AccountId) -> Digest {
    sha256_pair(SECRET_DOMAIN, account.as_str().as_bytes())
}

pub(crate) fn transaction_bytes(enc: &mut Encoder, tx: &Transaction) {
    enc.put_str(tx.id.as_str());
    enc.buf.push(tx.kind.tag());
    enc.put_str(tx.from.as_str());
    enc.put_str(tx.to.as_str());
    enc.put_u64(tx.amount.value());
    enc.put_bytes(&tx.payload);
}

/// Bytes covered by the block signature: everything except the signature
/// itself (and the hash, which covers the signature in turn).
pub fn presign_bytes(block: &Block) -> Vec<u8> {
    let mut enc = Encoder::new();
    enc.put_u64(block.slot);
    enc.put_str(block.leader.as_str());
    enc.put_digest(&block.prev_hash);
    enc.put_u64(block.transactions.len() as u64);
    for tx in &block.transactions {
        transaction_bytes(&mut enc, tx);
    }
    enc.finish()
}

/// Simulated signature over the block's pre-signature bytes.
pub fn sign_block(leader: &AccountId, presign: &[u8]) -> Digest {
    sha256_pair(secret_key(leader).as_bytes(), presign)
}

pub fn verify_signature(block: &Block) -> bool {
    sign_block(&block.leader, &presign_bytes(block)) == block.signature
}

/// SHA-256 over the canonical serialization of every field except the hash
/// itself. Any change to any field, signature included, changes the digest.
pub fn hash_block(block: &Block) -> Digest {
    let mut bytes = presign_bytes(block);
    bytes.extend_from_slice(block.signature.as_bytes());
    sha256(&bytes)
}
