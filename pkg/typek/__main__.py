from typek.cli import typek

if __name__ == '__main__':
    typek()
