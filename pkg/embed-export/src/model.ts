// Embedding backends. `xenova:<model-id>` (or a bare model id) loads a
// pretrained tweet-language model through transformers.js with mean pooling
// over the final-layer token states; `hash:<dim>` is the deterministic
// offline stand-in.

import { hashEmbed } from "./hash.js";

export interface Embedder {
  name: string;
  pooling: string;
  dim: number;
  embedBatch(texts: string[]): Promise<Float32Array[]>;
}

export function hashEmbedder(dim: number): Embedder {
  if (!Number.isInteger(dim) || dim < 16) {
    throw new Error(`hash embedder dimension must be an integer >= 16, got ${dim}`);
  }
  return {
    name: `hash:${dim}`,
    pooling: "token-count-hashing",
    dim,
    async embedBatch(texts: string[]): Promise<Float32Array[]> {
      return texts.map((text) => hashEmbed(text, dim));
    },
  };
}

export async function transformerEmbedder(modelId: string): Promise<Embedder> {
  let pipeline: any;
  try {
    ({ pipeline } = await import("@xenova/transformers" as string));
  } catch (cause) {
    throw new Error(
      `model load failure: the transformer backend needs the optional ` +
        `"@xenova/transformers" package (npm install @xenova/transformers)`,
      { cause },
    );
  }
  let extractor: any;
  try {
    extractor = await pipeline("feature-extraction", modelId);
  } catch (cause) {
    throw new Error(`model load failure: could not load ${modelId}`, { cause });
  }
  const probe = await extractor(["probe"], { pooling: "mean", normalize: false });
  const dim = probe.dims[probe.dims.length - 1];
  return {
    name: modelId,
    pooling: "mean",
    dim,
    async embedBatch(texts: string[]): Promise<Float32Array[]> {
      const tensor = await extractor(texts, { pooling: "mean", normalize: false });
      const data = tensor.data as Float32Array;
      return texts.map((_, row) =>
        Float32Array.from(data.subarray(row * dim, (row + 1) * dim)),
      );
    },
  };
}

export async function resolveEmbedder(spec: string): Promise<Embedder> {
  if (spec.startsWith("hash:")) {
    const dim = Number(spec.slice("hash:".length));
    return hashEmbedder(dim);
  }
  const modelId = spec.startsWith("xenova:") ? spec.slice("xenova:".length) : spec;
  if (!modelId) {
    throw new Error("empty model id");
  }
  return transformerEmbedder(modelId);
}
