import argparse
from contextlib import contextmanager
import logging
import sys

from yaml import YAMLError

from dnasplit import __version__
from dnasplit import config_validator_factory
from dnasplit import encode_factory
from dnasplit import ingest_timelines
from dnasplit import read_labels
from dnasplit import read_sequences
from dnasplit.curves import DEFAULT_WINDOW
from dnasplit.curves import default_min_prominence
from dnasplit.curves import derivative
from dnasplit.curves import smooth
from dnasplit.curves import validate_window
from dnasplit.detection import majority_vote
from dnasplit.detection import supervised_classify
from dnasplit.detection import supervised_train
from dnasplit.detection import unsupervised_split
from dnasplit.dna import AccountGroup
from dnasplit.dna import Label
from dnasplit.exceptions import InvalidConfigurationError
from dnasplit.exceptions import InvalidInputError
from dnasplit.exceptions import RecordValidationError
from dnasplit.experiments import DEFAULT_LENGTH
from dnasplit.experiments import DEFAULT_NOISE_RATE
from dnasplit.experiments import DEFAULT_TEMPLATE_LENGTH
from dnasplit.experiments import benchmark
from dnasplit.experiments import imbalance_experiment
from dnasplit.experiments import permute_sequences
from dnasplit.experiments import planted_sequences
from dnasplit.lcs import group_curve
from dnasplit.schemas import read_yaml_file
from dnasplit.synthetic import DEFAULT_SEED
from dnasplit.writers import detection_report
from dnasplit.writers import dump_report
from dnasplit.writers import metrics_report
from dnasplit.writers import write_benchmark_csv
from dnasplit.writers import write_curve_csv
from dnasplit.writers import write_imbalance_csv
from dnasplit.writers import write_permutation_csv
from dnasplit.writers import write_sequences

logger = logging.getLogger(__name__)
logging.basicConfig(
    format='%(asctime)s %(levelname)s %(name)s %(message)s',
    level=logging.WARNING
)

ALPHABETS = ['type3', 'content3', 'content6']

DEFAULTS = {
    'encode': {'alphabet': 'type3'},
    'curve': {'window': DEFAULT_WINDOW},
    'detect': {
        'mode': 'unsupervised',
        'window': DEFAULT_WINDOW,
        'min_prominence': None,
        'seed': DEFAULT_SEED,
    },
    'eval': {},
    'synth': {
        'alphabet': 'type3',
        'humans': 100,
        'bots': 100,
        'template_len': DEFAULT_TEMPLATE_LENGTH,
        'noise': DEFAULT_NOISE_RATE,
        'min_length': DEFAULT_LENGTH,
        'max_length': DEFAULT_LENGTH,
        'seed': DEFAULT_SEED,
    },
    'permute': {'trials': 100, 'seed': DEFAULT_SEED},
    'bench': {
        'accounts': [250, 500, 1000, 2000],
        'lengths': [DEFAULT_LENGTH],
        'alphabets': ['type3'],
        'repeats': 3,
        'seed': DEFAULT_SEED,
    },
    'imbalance': {
        'ratios': [round(0.01 * i, 2) for i in range(1, 11)],
        'total': 5000,
        'runs': 20,
        'length': DEFAULT_LENGTH,
        'template_len': DEFAULT_TEMPLATE_LENGTH,
        'seed': DEFAULT_SEED,
    },
}


def int_list(value):
    return [int(item) for item in value.split(',')]


def float_list(value):
    return [float(item) for item in value.split(',')]


def str_list(value):
    return value.split(',')


def load_config(filename):
    """Reads a ``--config`` file: command name to option defaults."""
    if filename is None:
        return {}
    try:
        config = read_yaml_file(filename)
    except (IOError, YAMLError) as exc:
        raise InvalidConfigurationError(
            "Cannot read config {0}: {1}".format(filename, exc))
    config = {} if config is None else config
    validator = config_validator_factory.create()
    for err in validator.iter_errors(config):
        raise InvalidConfigurationError(
            "Invalid config {0}: {1}".format(filename, err.message))
    return config


def resolve_options(args, config):
    """Command line beats the config file, which beats the defaults."""
    options = dict(DEFAULTS[args.command])
    options.update(config.get(args.command, {}))
    for name in options:
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    return options


@contextmanager
def open_output(filename):
    if filename in (None, '-'):
        yield sys.stdout
        return
    with open(filename, 'w', newline='') as fh:
        yield fh


def _group(filename):
    return AccountGroup.from_sequences(read_sequences(filename))


def echo_seed(seed):
    print("seed: {0}".format(seed), file=sys.stderr)


def run_encode(args, options):
    encode = encode_factory(options['alphabet'])
    sequences = encode(ingest_timelines(args.filename))
    with open_output(args.output) as out:
        write_sequences(sequences, out)


def run_curve(args, options):
    validate_window(options['window'])
    curve = group_curve(_group(args.filename))
    smoothed = smooth(curve, options['window'])
    series = derivative(smoothed) if curve.size >= 3 else None
    with open_output(args.output) as out:
        write_curve_csv(curve, smoothed, series, out)


def _vote_split(filename, options):
    group = _group(filename)
    result = unsupervised_split(
        group_curve(group), options['window'], options['min_prominence'])
    return group.alphabet_id.value, result


def run_detect(args, options):
    validate_window(options['window'])
    group = _group(args.filename)
    curve = group_curve(group)

    min_prominence = options['min_prominence']
    if options['mode'] == 'supervised':
        if not args.train:
            raise InvalidConfigurationError(
                "Supervised detection needs --train")
        if args.vote:
            raise InvalidConfigurationError(
                "--vote needs unsupervised detection")
        train_group = _group(args.train)
        classifier = supervised_train(
            group_curve(train_group), train_group.labels())
        result = supervised_classify(curve, classifier)
    else:
        if min_prominence is None:
            min_prominence = default_min_prominence(
                derivative(smooth(curve, options['window'])))
        result = unsupervised_split(
            curve, options['window'], min_prominence)

    parameters = {
        'alphabet': group.alphabet_id.value,
        'window': options['window'],
        'min_prominence': min_prominence,
        'seed': options['seed'],
    }
    if args.vote:
        votes = [_vote_split(filename, options) for filename in args.vote]
        result = majority_vote([result] + [vote for _, vote in votes])
        parameters['votes'] = [alphabet for alphabet, _ in votes]

    truth = read_labels(args.labels) if args.labels else group.labels()
    report = detection_report(result, parameters, truth, __version__)
    with open_output(args.output) as out:
        dump_report(report, out)


def run_eval(args, options):
    predicted = read_labels(args.predictions)
    truth = read_labels(args.truth)
    unlabeled = sorted(
        account_id for account_id, label in truth.items()
        if label == Label.UNLABELED)
    if unlabeled:
        raise InvalidInputError(
            "Truth labels missing for {0}".format(unlabeled))
    with open_output(args.output) as out:
        dump_report(metrics_report(predicted, truth), out)


def run_synth(args, options):
    if options['humans'] + options['bots'] < 1:
        raise InvalidConfigurationError("synth needs at least 1 account")
    echo_seed(options['seed'])
    sequences = planted_sequences(
        options['bots'], options['humans'], options['seed'],
        options['alphabet'], options['min_length'],
        options['template_len'], options['noise'], options['max_length'])
    with open_output(args.output) as out:
        write_sequences(sequences, out)


def run_permute(args, options):
    echo_seed(options['seed'])
    stats = permute_sequences(
        _group(args.filename), options['trials'], options['seed'])
    with open_output(args.output) as out:
        write_permutation_csv(stats, out)


def run_bench(args, options):
    echo_seed(options['seed'])
    records = benchmark(
        options['accounts'], options['lengths'], options['alphabets'],
        options['repeats'], options['seed'])
    with open_output(args.output) as out:
        write_benchmark_csv(records, out)


def run_imbalance(args, options):
    echo_seed(options['seed'])
    records = imbalance_experiment(
        options['ratios'], options['total'], options['runs'],
        options['seed'], length=options['length'],
        template_length=options['template_len'])
    with open_output(args.output) as out:
        write_imbalance_csv(records, out)


COMMANDS = {
    'encode': run_encode,
    'curve': run_curve,
    'detect': run_detect,
    'eval': run_eval,
    'synth': run_synth,
    'permute': run_permute,
    'bench': run_bench,
    'imbalance': run_imbalance,
}


def get_parser():
    parser = argparse.ArgumentParser(prog='dnasplit')
    parser.add_argument(
        '--config', help="YAML file with per-command option defaults")
    parser.add_argument(
        '-v', '--verbose', action='store_true', help="Log progress")
    parser.add_argument(
        '--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', required=True)

    def command(name, help, filename=True):
        sub = commands.add_parser(name, help=help)
        if filename:
            sub.add_argument(
                'filename', help="Input file, '-' reads stdin")
        sub.add_argument(
            '-o', '--output', help="Output file (default: stdout)")
        return sub

    encode = command('encode', "Encode timelines as DNA sequences")
    encode.add_argument('--alphabet', choices=ALPHABETS)

    curve = command('curve', "Export the LCS curve of a sequence group")
    curve.add_argument('--window', type=int)

    detect = command('detect', "Split a group into spambots and genuine")
    detect.add_argument('--mode', choices=['supervised', 'unsupervised'])
    detect.add_argument('--train', help="Labelled training sequences")
    detect.add_argument('--labels', help="Truth labels of the input")
    detect.add_argument('--window', type=int)
    detect.add_argument('--min-prominence', type=float)
    detect.add_argument('--seed', type=int)
    detect.add_argument(
        '--vote', action='append',
        help="Sequences of the same accounts under another alphabet; "
             "repeatable, splits are combined by majority")

    evaluate = command(
        'eval', "Score predicted labels against truth", filename=False)
    evaluate.add_argument('predictions', help="Predicted labels file")
    evaluate.add_argument('truth', help="Truth labels file")

    synth = command(
        'synth', "Generate planted bots and humans", filename=False)
    synth.add_argument('--alphabet', choices=ALPHABETS)
    synth.add_argument('--humans', type=int)
    synth.add_argument('--bots', type=int)
    synth.add_argument('--template-len', type=int)
    synth.add_argument('--noise', type=float)
    synth.add_argument('--min-length', type=int)
    synth.add_argument('--max-length', type=int)
    synth.add_argument('--seed', type=int)

    permute = command('permute', "Monte Carlo permutation of a group")
    permute.add_argument('--trials', type=int)
    permute.add_argument('--seed', type=int)

    bench = command(
        'bench', "Time and memory of the detection pipeline",
        filename=False)
    bench.add_argument('--accounts', type=int_list)
    bench.add_argument('--lengths', type=int_list)
    bench.add_argument('--alphabets', type=str_list)
    bench.add_argument('--repeats', type=int)
    bench.add_argument('--seed', type=int)

    imbalance = command(
        'imbalance', "Unsupervised MCC across bot ratios", filename=False)
    imbalance.add_argument('--ratios', type=float_list)
    imbalance.add_argument('--total', type=int)
    imbalance.add_argument('--runs', type=int)
    imbalance.add_argument('--length', type=int)
    imbalance.add_argument('--template-len', type=int)
    imbalance.add_argument('--seed', type=int)
    return parser


def main(args=None):
    parser = get_parser()
    args = parser.parse_args(args)
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)

    try:
        options = resolve_options(args, load_config(args.config))
        COMMANDS[args.command](args, options)
    except InvalidConfigurationError as exc:
        print(exc)
        sys.exit(2)
    except RecordValidationError as exc:
        print("# Validation Error\n")
        print(exc.message)
        sys.exit(1)
    except (InvalidInputError, IOError) as exc:
        print(exc)
        sys.exit(1)


if __name__ == '__main__':
    main()
