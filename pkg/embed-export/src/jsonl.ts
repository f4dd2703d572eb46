// Message input: one JSON object per line with user_id, tweet_id, text.

import { readFile } from "node:fs/promises";

export interface TweetRow {
  userId: string;
  tweetId: string;
  text: string;
}

export async function readTweets(path: string): Promise<TweetRow[]> {
  const raw = await readFile(path, "utf-8");
  const rows: TweetRow[] = [];
  const seen = new Set<string>();
  const lines = raw.split("\n");
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (!line) continue;
    let obj: unknown;
    try {
      obj = JSON.parse(line);
    } catch {
      throw new Error(`${path}:${i + 1}: invalid JSON`);
    }
    const record = obj as Record<string, unknown>;
    const userId = record["user_id"];
    const tweetId = record["tweet_id"];
    const text = record["text"];
    if (typeof userId !== "string" || typeof tweetId !== "string" || typeof text !== "string") {
      throw new Error(`${path}:${i + 1}: object needs string user_id, tweet_id, text`);
    }
    if (seen.has(tweetId)) {
      throw new Error(`${path}:${i + 1}: duplicate tweet_id ${tweetId}`);
    }
    seen.add(tweetId);
    rows.push({ userId, tweetId, text });
  }
  if (rows.length === 0) {
    throw new Error(`${path}: no messages found`);
  }
  return rows;
}
