// EMB1 binary embedding format:
//   magic "EMB1" | u32 LE dim | u64 LE count | count rows of dim f32 LE
// plus a row-aligned ids sidecar at <path>.ids (one message id per line).

import { open, readFile, writeFile } from "node:fs/promises";

export const MAGIC = Buffer.from("EMB1", "ascii");
export const HEADER_SIZE = 16;

function headerBytes(dim: number, count: number): Buffer {
  const header = Buffer.alloc(HEADER_SIZE);
  MAGIC.copy(header, 0);
  header.writeUInt32LE(dim, 4);
  header.writeBigUInt64LE(BigInt(count), 8);
  return header;
}

/**
 * Streaming writer: rows are appended batch by batch in input order and the
 * header count is patched on close.
 */
export class EmbWriter {
  private ids: string[] = [];
  private count = 0;

  private constructor(
    private readonly path: string,
    private readonly dim: number,
    private readonly handle: Awaited<ReturnType<typeof open>>,
  ) {}

  static async create(path: string, dim: number): Promise<EmbWriter> {
    if (!Number.isInteger(dim) || dim <= 0) {
      throw new Error(`dimension must be a positive integer, got ${dim}`);
    }
    const handle = await open(path, "w");
    await handle.write(headerBytes(dim, 0));
    return new EmbWriter(path, dim, handle);
  }

  async writeBatch(vectors: Float32Array[], ids: string[]): Promise<void> {
    if (vectors.length !== ids.length) {
      throw new Error("vectors and ids must have equal length");
    }
    const chunk = Buffer.alloc(vectors.length * this.dim * 4);
    vectors.forEach((vec, row) => {
      if (vec.length !== this.dim) {
        throw new Error(`row ${this.count + row}: expected dim ${this.dim}, got ${vec.length}`);
      }
      for (let j = 0; j < this.dim; j++) {
        const value = vec[j];
        if (!Number.isFinite(value)) {
          throw new Error(`row ${this.count + row}: non-finite value at ${j}`);
        }
        chunk.writeFloatLE(value, (row * this.dim + j) * 4);
      }
    });
    await this.handle.write(chunk);
    this.ids.push(...ids);
    this.count += vectors.length;
  }

  async close(): Promise<{ dim: number; count: number }> {
    await this.handle.write(headerBytes(this.dim, this.count), 0, HEADER_SIZE, 0);
    await this.handle.close();
    await writeFile(this.path + ".ids", this.ids.map((id) => id + "\n").join(""), "utf-8");
    return { dim: this.dim, count: this.count };
  }
}

export interface EmbFile {
  dim: number;
  count: number;
  ids: string[];
  vectors: Float32Array[];
}

/** Read and validate an EMB1 file (used by the tests). */
export async function readEmb(path: string): Promise<EmbFile> {
  const raw = await readFile(path);
  if (raw.length < HEADER_SIZE) {
    throw new Error(`${path}: truncated header`);
  }
  if (!raw.subarray(0, 4).equals(MAGIC)) {
    throw new Error(`${path}: bad magic`);
  }
  const dim = raw.readUInt32LE(4);
  const count = Number(raw.readBigUInt64LE(8));
  const expected = HEADER_SIZE + count * dim * 4;
  if (raw.length !== expected) {
    throw new Error(`${path}: payload is ${raw.length} bytes, expected ${expected}`);
  }
  const vectors: Float32Array[] = [];
  for (let row = 0; row < count; row++) {
    const vec = new Float32Array(dim);
    for (let j = 0; j < dim; j++) {
      vec[j] = raw.readFloatLE(HEADER_SIZE + (row * dim + j) * 4);
    }
    vectors.push(vec);
  }
  const idsText = await readFile(path + ".ids", "utf-8");
  const ids = idsText.length ? idsText.replace(/\n$/, "").split("\n") : [];
  if (ids.length !== count) {
    throw new Error(`${path}.ids: ${ids.length} ids for ${count} rows`);
  }
  return { dim, count, ids, vectors };
}
