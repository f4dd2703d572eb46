import { mkdtemp, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { readTweets } from "../src/jsonl.js";

let dir: string;

beforeEach(async () => {
  dir = await mkdtemp(join(tmpdir(), "jsonl-"));
});

afterEach(async () => {
  await rm(dir, { recursive: true, force: true });
});

async function write(name: string, lines: string[]): Promise<string> {
  const path = join(dir, name);
  await writeFile(path, lines.join("\n") + "\n", "utf-8");
  return path;
}

describe("readTweets", () => {
  it("parses well-formed lines in order", async () => {
    const path = await write("ok.jsonl", [
      JSON.stringify({ user_id: "u1", tweet_id: "t1", text: "hello" }),
      "",
      JSON.stringify({ user_id: "u2", tweet_id: "t2", text: "world" }),
    ]);
    const rows = await readTweets(path);
    expect(rows.map((r) => r.tweetId)).toEqual(["t1", "t2"]);
    expect(rows[1]).toEqual({ userId: "u2", tweetId: "t2", text: "world" });
  });

  it("rejects duplicate tweet ids with the line number", async () => {
    const path = await write("dup.jsonl", [
      JSON.stringify({ user_id: "u1", tweet_id: "t1", text: "a" }),
      JSON.stringify({ user_id: "u2", tweet_id: "t1", text: "b" }),
    ]);
    await expect(readTweets(path)).rejects.toThrow(/:2: duplicate/);
  });

  it("rejects malformed JSON and missing fields", async () => {
    const bad = await write("bad.jsonl", ["{not json"]);
    await expect(readTweets(bad)).rejects.toThrow(/invalid JSON/);
    const missing = await write("missing.jsonl", [JSON.stringify({ user_id: "u" })]);
    await expect(readTweets(missing)).rejects.toThrow(/needs string/);
  });

  it("rejects empty input", async () => {
    const path = await write("empty.jsonl", [""]);
    await expect(readTweets(path)).rejects.toThrow(/no messages/);
  });
});
