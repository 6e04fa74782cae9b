from os import path

import pytest
from yaml import safe_load

from dnasplit import labels_handler
from dnasplit import sequences_handler
from dnasplit import timelines_handler

DATA_DIR = path.join(path.abspath(path.dirname(__file__)), 'data')


def data_file(*parts):
    return path.join(DATA_DIR, *parts)


def record_file(name):
    return data_file('records', name)


def config_file(name):
    return data_file('configs', name)


def report_from_file(filename):
    with open(filename) as fh:
        return safe_load(fh)


class Factory(dict):
    __getattr__ = dict.__getitem__
    __setattr__ = dict.__setitem__


@pytest.fixture
def factory():
    return Factory(
        record_file=record_file,
        config_file=config_file,
        report_from_file=report_from_file,
    )


@pytest.fixture
def handler_timelines():
    return timelines_handler


@pytest.fixture
def handler_sequences():
    return sequences_handler


@pytest.fixture
def handler_labels():
    return labels_handler
