// Deterministic offline embedder: 64-bit FNV-1a token hashing with sign
// buckets, L2-normalized. Lets the exporter and its tests run without
// downloading model weights; real-text runs should use a transformer model.

const FNV_OFFSET = 0xcbf29ce484222325n;
const FNV_PRIME = 0x100000001b3n;
const MASK64 = 0xffffffffffffffffn;

const TOKEN_RE = /[#@]?\w+/gu;

function fnv1a64(token: string): bigint {
  const bytes = Buffer.from(token, "utf-8");
  let h = FNV_OFFSET;
  for (const b of bytes) {
    h ^= BigInt(b);
    h = (h * FNV_PRIME) & MASK64;
  }
  return h;
}

export function hashEmbed(text: string, dim: number): Float32Array {
  const vec = new Float32Array(dim);
  const tokens = text.toLowerCase().match(TOKEN_RE) ?? [];
  for (const token of tokens) {
    const h = fnv1a64(token);
    const bucket = Number((h >> 1n) % BigInt(dim));
    vec[bucket] += (h & 1n) === 1n ? 1 : -1;
  }
  let norm = 0;
  for (let j = 0; j < dim; j++) norm += vec[j] * vec[j];
  norm = Math.sqrt(norm);
  if (norm > 0) {
    for (let j = 0; j < dim; j++) vec[j] /= norm;
  }
  return vec;
}
