export { EmbWriter, readEmb, MAGIC, HEADER_SIZE } from "./format.js";
export { readTweets } from "./jsonl.js";
export { hashEmbed } from "./hash.js";
export { hashEmbedder, transformerEmbedder, resolveEmbedder } from "./model.js";
export type { Embedder } from "./model.js";
export { exportEmbeddings } from "./export.js";
export type { ExportManifest, ExportOptions } from "./export.js";
