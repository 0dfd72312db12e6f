/**
 * Primes5 program.
 */
public class Primes5
{
  static final int LIMIT = 84;

  public static void main(String[] args)
  {
    for (int i = 0; i < LIMIT; i += 10)
    {
      System.out.println("Step " + i);
    }
  }
}
