import os
import configparser
from concurrent.futures import ThreadPoolExecutor

from .logging import Logger

config = configparser.ConfigParser()
current_file_dir = os.path.dirname(os.path.abspath(__file__))
if os.path.exists(current_file_dir + "/config.ini"):
    Logger.debug("config.ini found")
else:
    Logger.error("config.ini not found")
config.read(current_file_dir + "/config.ini")


def get_config(section, key):
    """get the configuration from config.ini"""
    return config[section][key]


def get_int(section, key):
    return config.getint(section, key)


def get_float(section, key):
    return config.getfloat(section, key)


def get_str(section, key):
    return config.get(section, key)


def output_dir():
    """
    the default output directory, overridden by the environment variable
    named in [output] env
    """
    env_name = get_str("output", "env")
    return os.environ.get(env_name, get_str("output", "dir"))


def set_option(section, key, value):
    """override a value for the rest of the process, e.g. the sampling seed"""
    config[section][key] = str(value)


def parallel_map(fn, items):
    """
    fn over items on [sampling] workers threads, results in input order.
    An exception is raised for the first failing item in that order.
    """
    items = list(items)
    workers = get_int("sampling", "workers")
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
