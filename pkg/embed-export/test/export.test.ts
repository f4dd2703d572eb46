import { spawnSync } from "node:child_process";
import { mkdtemp, readFile, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { exportEmbeddings } from "../src/export.js";
import { readEmb } from "../src/format.js";
import { hashEmbed } from "../src/hash.js";
import { resolveEmbedder } from "../src/model.js";

let dir: string;

beforeEach(async () => {
  dir = await mkdtemp(join(tmpdir(), "export-"));
});

afterEach(async () => {
  await rm(dir, { recursive: true, force: true });
});

async function writeTweets(count: number): Promise<string> {
  const path = join(dir, "tweets.jsonl");
  const lines = [];
  for (let i = 0; i < count; i++) {
    lines.push(
      JSON.stringify({ user_id: `u${i % 3}`, tweet_id: `t${i}`, text: `message number ${i} #tag` }),
    );
  }
  await writeFile(path, lines.join("\n") + "\n", "utf-8");
  return path;
}

describe("hash embedder", () => {
  it("is deterministic and normalized", () => {
    const a = hashEmbed("Some #Tweet about @things", 64);
    const b = hashEmbed("Some #Tweet about @things", 64);
    expect(Array.from(a)).toEqual(Array.from(b));
    const norm = Math.hypot(...Array.from(a));
    expect(norm).toBeCloseTo(1, 5);
    expect(Array.from(hashEmbed("", 64))).toEqual(new Array(64).fill(0));
  });

  it("rejects unusable dimensions", async () => {
    await expect(resolveEmbedder("hash:4")).rejects.toThrow(/>= 16/);
  });
});

describe("exportEmbeddings", () => {
  it("writes header, sidecar and manifest consistently", async () => {
    const input = await writeTweets(10);
    const output = join(dir, "vectors.bin");
    const manifest = await exportEmbeddings({
      input,
      output,
      model: "hash:32",
      batchSize: 3,
      quiet: true,
    });
    expect(manifest).toMatchObject({
      model: "hash:32",
      dim: 32,
      count: 10,
      pooling: "token-count-hashing",
      batch_size: 3,
    });
    const file = await readEmb(output);
    expect(file.dim).toBe(manifest.dim);
    expect(file.count).toBe(manifest.count);
    expect(file.ids).toEqual(Array.from({ length: 10 }, (_, i) => `t${i}`));
    const onDisk = JSON.parse(await readFile(output + ".manifest.json", "utf-8"));
    expect(onDisk).toEqual(manifest);
  });

  it("row order follows input order regardless of batching", async () => {
    const input = await writeTweets(7);
    const a = join(dir, "a.bin");
    const b = join(dir, "b.bin");
    await exportEmbeddings({ input, output: a, model: "hash:32", batchSize: 2, quiet: true });
    await exportEmbeddings({ input, output: b, model: "hash:32", batchSize: 7, quiet: true });
    expect(await readFile(a)).toEqual(await readFile(b));
    expect(await readFile(a + ".ids", "utf-8")).toEqual(await readFile(b + ".ids", "utf-8"));
  });

  it("re-export is bit-identical", async () => {
    const input = await writeTweets(12);
    const output = join(dir, "again.bin");
    await exportEmbeddings({ input, output, model: "hash:48", quiet: true });
    const first = await readFile(output);
    await exportEmbeddings({ input, output, model: "hash:48", quiet: true });
    expect(await readFile(output)).toEqual(first);
  });

  it("fails cleanly on an unavailable transformer backend", async () => {
    const input = await writeTweets(2);
    await expect(
      exportEmbeddings({
        input,
        output: join(dir, "x.bin"),
        model: "xenova:no/such-model",
        quiet: true,
      }),
    ).rejects.toThrow(/model load failure/);
  });

  it("passes the primary pipeline's loader with zero warnings", async () => {
    const probe = spawnSync("python3", ["-c", "import commtext"], { encoding: "utf-8" });
    if (probe.status !== 0) {
      console.warn("primary package not importable; skipping round-trip check");
      return;
    }
    const input = await writeTweets(9);
    const output = join(dir, "roundtrip.bin");
    const manifest = await exportEmbeddings({
      input,
      output,
      model: "hash:32",
      batchSize: 4,
      quiet: true,
    });
    // -W error promotes any validation warning to a failure.
    const result = spawnSync(
      "python3",
      [
        "-W",
        "error",
        "-c",
        [
          "import sys",
          "from commtext.nlp import load_embeddings",
          "store = load_embeddings(sys.argv[1])",
          "print(store.count, store.dim, store.ids[0], store.ids[-1])",
        ].join("\n"),
        output,
      ],
      { encoding: "utf-8" },
    );
    expect(result.stderr).toBe("");
    expect(result.status).toBe(0);
    expect(result.stdout.trim()).toBe(`${manifest.count} ${manifest.dim} t0 t8`);
  });
});
