import logging

LOGGER_NAME='instantonLab'

#1 - DEBUG, 2 - INFO, 3 - WARNING
LEVELS={1:logging.DEBUG, 2:logging.INFO, 3:logging.WARNING}


def getLogger(module=None):
    if module is None:
        return logging.getLogger(LOGGER_NAME)
    return logging.getLogger(LOGGER_NAME+"."+module)


def setupLogging(log=3):
    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s')
    logger=getLogger()
    logger.setLevel(LEVELS.get(log, logging.DEBUG if log<1 else logging.WARNING))
    return logger
