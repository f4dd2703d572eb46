#!/usr/bin/env node
import { parseArgs } from "node:util";

import { exportEmbeddings } from "./export.js";

const USAGE = `Usage: embed-export --input tweets.jsonl --output vectors.bin [options]

Options:
  --input <path>        JSONL messages: {"user_id", "tweet_id", "text"} per line
  --output <path>       EMB1 output file (writes <path>.ids and <path>.manifest.json too)
  --model <spec>        "xenova:<model-id>", a bare model id, or "hash:<dim>"
                        (default: xenova:Xenova/bertweet-base)
  --batch-size <n>      embedding batch size (default: 64)
  --quiet               suppress progress lines
`;

async function main(): Promise<number> {
  let values;
  try {
    ({ values } = parseArgs({
      options: {
        input: { type: "string" },
        output: { type: "string" },
        model: { type: "string", default: "xenova:Xenova/bertweet-base" },
        "batch-size": { type: "string", default: "64" },
        quiet: { type: "boolean", default: false },
        help: { type: "boolean", default: false },
      },
    }));
  } catch (err) {
    console.error((err as Error).message);
    console.error(USAGE);
    return 2;
  }
  if (values.help) {
    console.log(USAGE);
    return 0;
  }
  if (!values.input || !values.output) {
    console.error("--input and --output are required");
    console.error(USAGE);
    return 2;
  }
  const batchSize = Number(values["batch-size"]);
  try {
    const manifest = await exportEmbeddings({
      input: values.input,
      output: values.output,
      model: values.model!,
      batchSize,
      quiet: values.quiet,
    });
    console.log(
      `wrote ${manifest.count} x ${manifest.dim} embeddings (${manifest.model}) -> ${manifest.output}`,
    );
    return 0;
  } catch (err) {
    console.error((err as Error).message);
    return 1;
  }
}

main().then((code) => {
  process.exitCode = code;
});
