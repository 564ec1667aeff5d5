/**
 * Entry point: `node dist/cli.js [--mode echo|ngram-fill] [--model FILE]`.
 *
 * echo mode answers every correct request with the text unchanged, which makes
 * it a liveness probe for the whole pipe. ngram-fill requires --model and
 * rewrites flagged replacement characters using the n-gram model. Either mode
 * answers score requests when a model is loaded. Exits nonzero when the model
 * file is missing or unreadable, or when the arguments make no sense.
 */
import { parseArgs } from 'node:util';

import { CharNGramModel } from './model.js';
import { Mode, serveStdio } from './protocol.js';

function fail(message: string): never {
  process.stderr.write(`corrector-bridge: ${message}\n`);
  process.exit(2);
}

function main(): Promise<void> {
  let values: { mode?: string; model?: string };
  try {
    values = parseArgs({
      options: {
        mode: { type: 'string', default: 'echo' },
        model: { type: 'string' },
      },
    }).values;
  } catch (err) {
    fail(err instanceof Error ? err.message : String(err));
  }
  const mode = values.mode;
  if (mode !== 'echo' && mode !== 'ngram-fill') {
    fail(`unknown mode ${JSON.stringify(mode)}; expected echo or ngram-fill`);
  }
  let model: CharNGramModel | null = null;
  if (values.model !== undefined) {
    try {
      model = CharNGramModel.load(values.model);
    } catch (err) {
      fail(`cannot load model: ${err instanceof Error ? err.message : String(err)}`);
    }
    if (model.counts.size === 0) {
      fail(`model file has no records: ${values.model}`);
    }
  }
  if (mode === 'ngram-fill' && model === null) {
    fail('--model is required for ngram-fill mode');
  }
  return serveStdio(mode as Mode, model);
}

await main();
