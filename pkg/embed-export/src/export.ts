import { writeFile } from "node:fs/promises";

import { EmbWriter } from "./format.js";
import { readTweets } from "./jsonl.js";
import { Embedder, resolveEmbedder } from "./model.js";

export interface ExportManifest {
  model: string;
  dim: number;
  count: number;
  input: string;
  output: string;
  pooling: string;
  batch_size: number;
}

export interface ExportOptions {
  input: string;
  output: string;
  model: string;
  batchSize?: number;
  quiet?: boolean;
  embedder?: Embedder; // injected in tests
}

/**
 * Embed every message of a JSONL tweets file into the EMB1 binary format.
 * Row order always follows input order regardless of batching.  Writes the
 * manifest JSON next to the output file.
 */
export async function exportEmbeddings(options: ExportOptions): Promise<ExportManifest> {
  const batchSize = options.batchSize ?? 64;
  if (!Number.isInteger(batchSize) || batchSize <= 0) {
    throw new Error(`batch size must be a positive integer, got ${batchSize}`);
  }
  const rows = await readTweets(options.input);
  const embedder = options.embedder ?? (await resolveEmbedder(options.model));
  const writer = await EmbWriter.create(options.output, embedder.dim);
  for (let start = 0; start < rows.length; start += batchSize) {
    const batch = rows.slice(start, start + batchSize);
    const vectors = await embedder.embedBatch(batch.map((row) => row.text));
    await writer.writeBatch(vectors, batch.map((row) => row.tweetId));
    if (!options.quiet) {
      const done = Math.min(start + batchSize, rows.length);
      console.log(`embedded ${done}/${rows.length}`);
    }
  }
  const { dim, count } = await writer.close();
  const manifest: ExportManifest = {
    model: embedder.name,
    dim,
    count,
    input: options.input,
    output: options.output,
    pooling: embedder.pooling,
    batch_size: batchSize,
  };
  await writeFile(
    options.output + ".manifest.json",
    JSON.stringify(manifest, Object.keys(manifest).sort(), 2) + "\n",
    "utf-8",
  );
  return manifest;
}
